#!/usr/bin/env python3
"""Smoke test for the ybfuse_py extension module.

Loads the module either from an installed package or straight from the cargo
build tree (``cargo build -p ybfuse-py --release`` first), then exercises the
bound functions against known values.
"""

import json
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path


def load_module():
    try:
        import ybfuse_py  # noqa: F401

        return ybfuse_py
    except ImportError:
        pass

    repo_root = Path(__file__).resolve().parent.parent
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    candidates = []
    for profile in ("release", "debug"):
        for stem in ("libybfuse_py.so", "libybfuse_py.dylib", "ybfuse_py.dll"):
            candidates.append(repo_root / "target" / profile / stem)
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "ybfuse_py is not importable and no built artifact was found; "
            "run `cargo build -p ybfuse-py --release` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="ybfuse-py-"))
    target = stage / f"ybfuse_py{suffix}"
    shutil.copyfile(built, target)
    sys.path.insert(0, str(stage))
    import ybfuse_py

    return ybfuse_py


def main():
    yb = load_module()

    # tableau combinatorics
    assert yb.standard_tableaux([2, 1]) == [[[1, 2], [3]], [[1, 3], [2]]]
    assert yb.hook_lengths([2, 1]) == [[3, 1], [1]]
    assert yb.hook_product_scalar([2, 1]) == "1/3"
    assert yb.hook_product_scalar([3]) == "1/6"
    assert yb.deformed_hook_scalar([2], "2") == "4/5"
    assert yb.classical_contents([[1, 3], [2]]) == ["0/1", "-1/1", "1/1"]

    # dimension oracles
    assert yb.semistandard_count([2], 2) == 3
    assert yb.semistandard_count([2, 1], 2) == 2
    assert yb.semistandard_count([1, 1, 1], 2) == 0
    assert yb.hook_semistandard_count([1, 1], 1, 1) == 2

    # kernels and their checks
    matrix = json.loads(yb.kernel_matrix_json("yang", 2))
    assert matrix["rows"] == 4 and matrix["cols"] == 4
    assert yb.unitarity_scalar("yang", 2) == "(u^2 - 1)/(u^2)"
    assert yb.verify_base_ybe("yang", 2)
    assert yb.verify_base_ybe("super-yang", 1, 1)
    assert yb.verify_base_ybe("hecke", 2, 0, "2")
    assert yb.verify_base_ybe("super-hecke", 1, 1, "3/2")

    # invariant subspaces and the restricted fused operator
    assert yb.tableau_subspace_rank("yang", 2, [[1, 2]]) == 3
    assert yb.tableau_subspace_rank("yang", 2, [[1], [2], [3]]) == 0
    assert yb.kernel_contents("hecke", 2, [[1, 2]], 0, "2") == ["1/1", "4/1"]
    fused = json.loads(yb.fused_matrix_json("yang", 2, [[1, 2]], [[1, 2]]))
    assert fused["rows"] == 9

    # idempotent coefficients: one third times the three-letter evaluation
    coeffs = yb.idempotent_coefficients("sym", [[1, 2], [3]])
    assert coeffs["[1,2,3]"] == "1/3"
    deformed = yb.idempotent_coefficients("hecke", [[1, 2]], "2")
    assert deformed["[1,2]"]  # identity coefficient present

    # worked examples rebuild bit for bit
    for example in ("ex-fus1", "mat-Sn", "ex-Ra", "mat-Hn"):
        assert yb.reproduce_matches(example, "2"), example

    # errors surface as ValueError
    try:
        yb.hook_product_scalar([1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid partition accepted")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
