import json

import _a2zeta as a2


def test_build_and_validate():
    c = a2.build_complex(2, "z3")
    ok, summary = a2.validate_complex(c)
    assert ok, summary
    assert a2.euler_characteristic(c) == 1
    doc = json.loads(c)
    assert doc["q"] == 2
    assert len(doc["edges"]) == 14
    assert len(doc["chambers"]) == 21


def test_lfun_report():
    c = a2.build_complex(2, "trivial")
    rep = json.loads(a2.lfun_report(c, "trivial"))
    assert rep["P0"] == ["1", "-7", "14", "-8"]
    assert rep["deg"]["P0"] == 3
    assert rep["P1"][0] == "1"


def test_full_checks_pass():
    c = a2.build_complex(2, "z3")
    ok, report = a2.run_checks(c, "trivial", 3)
    assert ok, report
    checks = json.loads(report)["checks"]
    assert checks["main_identity"]
    assert checks["det_phi0_is_p0"]


def test_cover_counts():
    base = a2.build_complex(2, "z3")
    cover = a2.build_cover(base)
    assert a2.euler_characteristic(cover) == 3
    ok, _ = a2.validate_complex(cover)
    assert ok


def test_tallies_are_integer_at_trivial_rep():
    c = a2.build_complex(2, "z3")
    edge, chamber = a2.geodesic_tallies(c, "trivial", 3)
    assert len(edge) == 3
    for poly in edge + chamber:
        for coeff in poly:
            assert "/" not in coeff


def test_lattice_oracle():
    ok, summary = a2.lattice_oracle(2)
    assert ok, summary
