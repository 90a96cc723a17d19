"""Smoke test for the puncodes Python module.

Uses an installed `puncodes` when present, otherwise loads the library
built by `cargo build -p puncodes-py` from target/.
"""

import importlib.machinery
import importlib.util
import pathlib
import sys


def load():
    try:
        import puncodes

        return puncodes
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libpuncodes_py.so"
        if lib.exists():
            loader = importlib.machinery.ExtensionFileLoader("puncodes", str(lib))
            spec = importlib.util.spec_from_file_location("puncodes", lib, loader=loader)
            mod = importlib.util.module_from_spec(spec)
            loader.exec_module(mod)
            sys.modules["puncodes"] = mod
            return mod
    sys.exit("puncodes not installed and no target/*/libpuncodes_py.so; run cargo build -p puncodes-py")


def main():
    pc = load()

    field = pc.Field(7)
    assert field.modulus == 0b10000011
    x = field.gamma
    assert field.mul(x, field.inv(x)) == 1
    assert field.pow(x, 127) == 1
    assert field.trace(1) == 1

    gold = pc.Function(7, "gold(1)")
    assert gold.is_ab(field) and gold.is_apn(field)
    spec = gold.spectrum(field)
    assert set(spec["spectrum"]) == {"-16", "0", "16"}
    even = pc.Function(6, "gold(1)").spectrum(pc.Field(6))
    assert even["ab"]["refused"]["kind"] == "hypothesis"

    f5 = pc.Field(5)
    code = pc.Code.build(f5, pc.Function(5, "gold(1)"))
    assert (code.n, code.k) == (16, 10)
    wd = code.weight_distribution()
    assert wd[8] == 390 and sum(wd) == 2**10
    assert code.min_distance() == 4 and code.dual_distance() == 6
    assert code.dual().weight_distribution() == code.dual_weight_distribution()

    hamming = [1, 0, 0, 7, 7, 0, 0, 1]
    assert pc.macwilliams(hamming, 4) == [1, 0, 0, 0, 7, 0, 0, 0]

    r = pc.build(9, "pair-sum(9,65)")
    assert (r["n"], r["k"], r["d"]) == (256, 15, 96)
    assert r["bounds"]["dual_sphere_packing_optimal"] is True

    r = pc.verify("cyclo-gold-class", 6, k=1)
    assert r["verdict"] == "pass"
    assert r["enumerated"]["table"] == {"8": 210, "12": 280, "16": 21}
    assert r["enumerated"]["dual"]["d"] == 5

    p = pc.predict("ab-perm-nu0", 7)
    assert p["n"] == 63

    batch = pc.verify_all(m_max=6, jobs=2)
    assert batch["failed"] == 0 and batch["refused"] == 0 and batch["passed"] > 0

    try:
        pc.verify("gold-support-v2le", 6, k=1)
    except pc.PuncodesError as e:
        assert e.kind == "hypothesis"
    else:
        raise AssertionError("hypothesis violation was not refused")

    assert "gold-support-half" in dict(pc.theorems())
    assert 3 in pc.ab_exponents(5)
    print("puncodes", pc.__version__, "smoke test ok")


if __name__ == "__main__":
    main()
