"""Write every catalog algebra as a JSON document, ready for the CLI.

    python3 scripts/export_catalog.py out_dir
    solvshadow shadow out_dir/oscillator.json --cross-check
"""
import sys
from pathlib import Path

from solvshadow.catalog import catalog
from solvshadow.document import document_from_algebra, serialize


def main(argv):
    out = Path(argv[0] if argv else "catalog_docs")
    out.mkdir(parents=True, exist_ok=True)
    for g in catalog():
        (out / f"{g.name}.json").write_text(serialize(document_from_algebra(g)), encoding="utf-8")
    print(f"wrote {len(catalog())} documents to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
