#!/usr/bin/env python3
"""Smoke test for the specfrac_py extension module.

Build the module first:

    cargo build --release -p specfrac-py

The script copies the cdylib next to a temp directory under the name Python
expects, imports it, and exercises the main operations.
"""

import pathlib
import shutil
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_cdylib() -> pathlib.Path:
    ext = {"darwin": ".dylib", "win32": ".dll"}.get(sys.platform, ".so")
    prefix = "" if sys.platform == "win32" else "lib"
    for profile in ("release", "debug"):
        candidate = ROOT / "target" / profile / f"{prefix}specfrac_py{ext}"
        if candidate.exists():
            return candidate
    sys.exit(
        "specfrac_py cdylib not found; run `cargo build --release -p specfrac-py` first"
    )


def import_module():
    built = locate_cdylib()
    tmp = tempfile.mkdtemp(prefix="specfrac_py_")
    suffix = ".pyd" if sys.platform == "win32" else ".so"
    shutil.copy(built, pathlib.Path(tmp) / f"specfrac_py{suffix}")
    sys.path.insert(0, tmp)
    import specfrac_py

    return specfrac_py


def main() -> None:
    sf = import_module()

    assert sf.expand("10/7") == ["1", "2", "3"]
    assert sf.expand("-5/3") == ["-2", "3"]
    assert sf.evaluate(["0", "2", "3", "-2"]) == "5/12"
    assert sf.normalize(["0", "2", "3", "-2"]) == ["0", "2", "2", "2"]

    folded = sf.fold(["0", "2"], ["3"])
    assert folded == ["0", "2", "3", "-2"]
    assert sf.detect_k_fold(folded, 2) == ("0", ["2"], ["3"])
    assert sf.detect_k_fold(["0", "1", "2", "3"], 2) is None

    word, value = sf.duplicate(["1", "1"], "1")
    assert word == ["1", "1", "1", "1", "1"]
    assert value == "8/5"

    assert sf.chebyshev(4) == "1,0,-8,0,8"

    case, modulus, residue, oracle = sf.classify("0,0,1")
    assert (case, oracle) == (1, "yes")
    assert modulus == "0,0,1" and residue == "0"
    case, _, _, oracle = sf.classify("-1,1,1")
    assert (case, oracle) == (None, "no")

    prefix = sf.sum_prefix("1,0,-8,0,8", 4, 2)
    assert prefix[:8] == ["0", "1", "1", "23", "1", "2", "1", "18815"]

    symbolic = sf.sum_prefix("0,0,1", 4)
    assert symbolic[:4] == ["0", "-1,1", "2,1", "0,1"]

    liouville = sf.reciprocal_power_prefix("10", "factorial", 5)
    assert liouville[:12] == [
        "0", "4", "1", "3", "5", "99", "1", "4", "3", "1", "4", "999999999999",
    ]

    try:
        sf.duplicate(["1", "2"], "1")
    except ValueError as err:
        assert "not palindromic" in str(err)
    else:
        sys.exit("expected a ValueError for the non-palindromic word")

    print("smoke test passed", f"(python {sysconfig.get_python_version()})")


if __name__ == "__main__":
    main()
