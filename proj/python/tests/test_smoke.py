import pytest

import annarc


def test_enumerate():
    assert [len(annarc.enumerate(n)) for n in range(5)] == [1, 2, 6, 20, 70]
    assert annarc.enumerate(1) == ["+-", "-+"]


def test_matching_and_evaluate():
    assert annarc.matching("++--") == {"n": 2, "signs": "++--", "arcs": [[1, 4, 0], [2, 3, 0]]}
    assert annarc.evaluate("g(2,1); g(4,1); f(4,1); f(2,1)") == {"signs": "", "n0": 2, "n1": 0, "shift": 0}


def test_hom():
    assert annarc.hom("+-", "-+") == {"n0": 0, "n1": 1, "dims": {"1": 2}}
    assert annarc.basis("+-", "+-") == ["1", "X"]


def test_compose():
    r = annarc.compose("+-", "-+", "+-", "V", "W")
    assert r["result"] == [{"basis": "X", "coeff": "1"}]
    assert annarc.compose("+-", "+-", "+-", "X", "X")["result"] == []


def test_rewrites_and_elimination():
    assert annarc.eliminate_crossings("t+(2,1); t-(2,1)") == "id(2)"
    names = {r[0] for r in annarc.rewrites("g(4,2); f(4,1)")}
    assert "R0" in names


def test_verify_and_cli():
    assert annarc.verify("associativity", 1)["passed"] is True
    code, out, _ = annarc.run_cli(["hom", "--n", "1", "--alpha", "+-", "--beta", "-+"])
    assert code == 0 and out == '{"n0":0,"n1":1,"dims":{"1":2}}\n'


def test_errors():
    with pytest.raises(annarc.Error, match="UnbalancedSequence"):
        annarc.hom("++", "-+")
    with pytest.raises(annarc.Error, match="ArityError"):
        annarc.evaluate("g(2,1); f(4,1)")
