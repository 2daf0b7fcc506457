import symtrop


def test_partition_basics():
    p = symtrop.Partition("4,2,2")
    assert p.parts == [4, 2, 2]
    assert p.size == 8
    assert p.length == 3
    assert str(p) == "(4,2^2)"
    assert symtrop.Partition([2, 4, 2]) == p


def test_enumeration_and_order():
    parts = symtrop.partitions(4)
    assert [str(p) for p in parts] == ["(1^4)", "(2,1^2)", "(3,1)", "(2^2)", "(4)"]
    assert symtrop.superdominates(symtrop.Partition("1^4"), symtrop.Partition("4"))
    assert not symtrop.superdominates(symtrop.Partition("5,1"), symtrop.Partition("2^3"))
    assert not symtrop.superdominates(symtrop.Partition("2^3"), symtrop.Partition("5,1"))


def test_fuse_star_covers():
    a = symtrop.Partition("2,1")
    b = symtrop.Partition("3")
    assert symtrop.fuse(a, b) == symtrop.Partition("3,2,1")
    assert symtrop.star(a) == b
    assert symtrop.covers(a, b)


def test_hasse():
    edges = symtrop.hasse(8)
    assert len(edges) == 25
    dot = symtrop.hasse_dot(8)
    assert "digraph" in dot


def test_binomial_witness():
    assert symtrop.binomial_inequality_holds(
        symtrop.Partition("1^4"), symtrop.Partition("4")
    )
    w = symtrop.binomial_violation_witness(
        symtrop.Partition("5,1"), symtrop.Partition("2^3")
    )
    assert w is not None


def test_trop_cones():
    cell = symtrop.trop_vandermonde(4)
    assert len(cell["inequalities"]) == 3
    bp = symtrop.trop_bp_dual(4)
    assert len(bp["inequalities"]) == 4
    assert any(">=" in s for s in bp["facets_pretty"])
    t2 = symtrop.t_k_cone(3, 2)
    assert len(t2["inequalities"]) == 2


def test_stabilization():
    r = symtrop.stabilization_tau(3, 4)
    assert r["tau"] == 2
    assert r["certified"]


def test_pencil_and_sos_dual():
    assert "p(2^3)" in symtrop.pencil_pretty("B6")
    t = symtrop.trop_of_sos("B10")
    assert len(t["inequalities"]) == 9


def test_certificates():
    for report in (
        symtrop.verify_quartic(),
        symtrop.verify_decic(),
        symtrop.verify_sos4_extreme_rays(),
    ):
        assert report, "empty report"
        assert all(c["pass"] for c in report)
