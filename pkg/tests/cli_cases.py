"""Command, fixture and expected exit status for every CLI golden case."""

from pathlib import Path

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = [
    ("ginverse", "ginverse_nilpotent", 0),
    ("ginverse", "ginverse_row_prescribed", 0),
    ("ginverse", "ginverse_with_inner", 0),
    ("ginverse", "ginverse_bad_inner", 1),
    ("ginverse", "ginverse_zero_denominator", 2),
    ("ginverse", "duplicate_key", 2),
    ("ginverse", "malformed", 2),
    ("check-chain", "chain_default4", 0),
    ("check-chain", "chain_not_regular", 1),
    ("check-chain", "chain_odd", 2),
    ("verify-cocycle", "cocycle_idempotent_pair", 0),
    ("verify-cocycle", "cocycle_mixed", 0),
    ("verify-cocycle", "cocycle_nilpotent_triple", 1),
    ("verify-cocycle", "cocycle_undeclared_arrow", 2),
    ("obstruction-degree", "cocycle_invertible_pair", 0),
    ("obstruction-degree", "cocycle_idempotent_pair", 0),
    ("obstruction-degree", "cocycle_mixed", 0),
    ("obstruction-degree", "cocycle_nilpotent_triple", 1),
    ("obstruction-degree", "cocycle_undeclared_arrow", 2),
    ("lift", "lift_basic", 0),
    ("lift", "lift_bad_retraction", 1),
    ("lift", "lift_shape_mismatch", 2),
    ("cocycle-morphism", "morphism_conjugate", 0),
    ("cocycle-morphism", "morphism_broken", 1),
    ("cocycle-morphism", "cocycle_mixed", 2),
    ("tensor", "tensor_pairs", 0),
    ("tensor", "tensor_nonregular", 1),
    ("tensor", "tensor_length_mismatch", 2),
    ("dual", "cocycle_mixed", 0),
    ("dual", "cocycle_nilpotent_triple", 1),
    ("dual", "cocycle_undeclared_arrow", 2),
    ("pairing", "tensor_pairs", 0),
    ("pairing", "cocycle_nilpotent_triple", 1),
    ("pairing", "cocycle_undeclared_arrow", 2),
    ("functor-check", "functor_conjugate", 0),
    ("functor-check", "functor_wrong_obstruction", 1),
    ("functor-check", "functor_undeclared_object", 2),
    ("algebra-check", "algebra_coordinate", 0),
    ("algebra-check", "bialgebra_z2", 0),
    ("algebra-check", "algebra_not_regular", 1),
    ("algebra-check", "algebra_float", 2),
    ("hopf-check", "bialgebra_z2", 0),
    ("hopf-check", "bialgebra_z3", 0),
    ("hopf-check", "bialgebra_z2_zero_antipode", 1),
    ("hopf-check", "algebra_coordinate", 2),
    ("module-check", "module_coordinate", 0),
    ("module-check", "module_not_associative", 1),
    ("module-check", "module_bad_shape", 2),
    ("tqft-check", "tqft_reversible", 0),
    ("tqft-check", "tqft_projection_pair", 0),
    ("tqft-check", "tqft_cup_cap", 0),
    ("tqft-check", "tqft_not_regular", 1),
    ("tqft-check", "tqft_boundary_mismatch", 2),
]


def golden_path(command: str, fixture: str, report: str) -> Path:
    return GOLDEN / f"{command}__{fixture}.{report}"


def run_cli(command: str, fixture: str, report: str = "text", *extra: str) -> tuple[int, str, str]:
    """Run the tool in-process and capture its streams."""
    import contextlib
    import io

    from regobs.cli import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main([command, str(FIXTURES / f"{fixture}.json"), "--report", report, *extra])
    return code, out.getvalue(), err.getvalue()
