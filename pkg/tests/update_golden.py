"""Rewrite the golden reports from the current implementation.

Run ``python tests/update_golden.py`` after an intended output change and
review the diff before committing it.
"""

from cli_cases import CASES, GOLDEN, golden_path, run_cli

if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for command, fixture, _ in CASES:
        for report in ("text", "json"):
            code, out, err = run_cli(command, fixture, report)
            golden_path(command, fixture, report).write_text(f"exit {code}\n{out}{err}", encoding="utf-8")
