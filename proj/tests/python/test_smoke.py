import bzf


def test_sets_and_closure():
    s = bzf.EpSet("{0,2}|[7)")
    assert str(s) == "{0,2}|[7)"
    assert 8 in s and 1 not in s
    fam = bzf.Family.close([bzf.EpSet("{0,1}")])
    assert [str(m) for m in fam.members] == ["{}", "{0}", "{0,1}"]
    assert bzf.is_omega_closed(fam.members)
    assert bzf.exists_shift_subset(bzf.EpSet("[0)"), bzf.EpSet("[4)")) == 4


def test_product_and_relations():
    ctx = bzf.Semigroup(bzf.Family.parse("family{ [0) }"))
    a = ctx.element(-3, -1, bzf.EpSet("[0)"))
    b = ctx.element(2, 4, bzf.EpSet("[0)"))
    assert str(ctx.multiply(a, b)) == "(0,4;[0))"
    assert str(bzf.inverse(a)) == "(-1,-3;[0))"
    assert bzf.natural_leq(ctx.element(1, 1, bzf.EpSet("[0)")),
                           ctx.element(0, 0, bzf.EpSet("[0)")))
    assert bzf.green(a, ctx.element(-3, 9, bzf.EpSet("[0)")), "R")
    assert ctx.sigma(ctx.element(2, 5, bzf.EpSet("[0)"))) == -3


def test_classify():
    ctx = bzf.Semigroup(bzf.Family.parse("family{ {}; 2+3*w }"))
    report = ctx.classify()
    assert report["iso_type"] == "ZeroBisimpleProgression"
    assert (report["i0"], report["j0"]) == (2, 3)


def test_errors():
    try:
        bzf.Family.parse("family{ {0,1} }")
    except bzf.Error as e:
        assert "NotOmegaClosed" in str(e)
    else:
        raise AssertionError("expected an error")


def test_run():
    out, code = bzf.run("eval (0,0;[0)) * (1,1;[0))")
    assert code == 0 and out == {"result": "(1,1;[0))"}
    out, code = bzf.run("selftest associativity", samples=100)
    assert code == 0 and out["passed"]
