from fractions import Fraction

from cyclekit.exact import INF, exact, fmt_exact, is_inf, parse_exact


def test_format_integers_and_fractions():
    assert fmt_exact(Fraction(4)) == "4"
    assert fmt_exact(Fraction(4, 3)) == "4/3"
    assert fmt_exact(Fraction(-3, 2)) == "-3/2"
    assert fmt_exact(INF) == "inf"


def test_parse_round_trip():
    for text in ("0", "7", "4/3", "-5/2", "inf"):
        assert fmt_exact(parse_exact(text)) == text


def test_inf_interacts_with_fractions():
    assert is_inf(INF)
    assert not is_inf(Fraction(10**9))
    assert INF > Fraction(10**12)
    assert min(Fraction(5), INF) == Fraction(5)
    # the (tau+1)(delta+1)-1 bound stays infinite for complete graphs
    assert (INF + 1) * (Fraction(4) + 1) - 1 == INF


def test_exact_constructor():
    assert exact(6, 4) == Fraction(3, 2)
