"""Writes the Markdown law table from `hfa laws --json` on stdin."""

import json
import sys


def main():
    laws = json.load(sys.stdin)
    proved = sum(law["status"] == "proved" for law in laws)
    out = [
        "# Law registry",
        "",
        f"{len(laws)} statements: {proved} proved (checked on random instances), "
        f"{len(laws) - proved} refuted (each carries at least one falsifying fixture).",
        "Regenerate with `hfa laws --json | python3 tools/law_table.py > docs/laws.md`;",
        "the Python smoke tests check that this table matches the registry.",
        "",
        "| id | status | statement |",
        "|---|---|---|",
    ]
    for law in laws:
        statement = law["statement"].replace("|", "\\|")
        out.append(f"| `{law['id']}` | {law['status']} | {statement} |")
    print("\n".join(out))


if __name__ == "__main__":
    main()
