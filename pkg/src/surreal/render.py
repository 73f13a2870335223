"""Text rendering of Numbers in the CLI expression syntax."""
from fractions import Fraction


def _rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _exponent(e) -> str:
    if e.is_rational():
        q = e.rational()
        if q.denominator == 1:
            return str(q.numerator)
        return f"({_rational(q)})"
    return f"({render_number(e)})"


def _term(c: Fraction, e) -> str:
    if e.is_zero():
        return _rational(c)
    base = "w" if (e.is_rational() and e.rational() == 1) else f"w^{_exponent(e)}"
    if c == 1:
        return base
    if c == -1:
        return "-" + base
    return f"{_rational(c)}*{base}"


def render_series(terms) -> str:
    if not terms:
        return "0"
    out = _term(*terms[0])
    for c, e in terms[1:]:
        out += f" - {_term(-c, e)}" if c < 0 else f" + {_term(c, e)}"
    return out


def render_number(x) -> str:
    if x.den is None:
        return render_series(x.num)
    top = render_series(x.num)
    if len(x.num) > 1:
        top = f"({top})"
    return f"{top}/({render_series(x.den)})"
