"""Built-in example algebras with their stratification data.

Covers the two finite quivers A and B, finite windows of the half-line
and two-sided zigzag quivers with monomial relations, and finite windows
of the quantum-sl2 / gl(1|1) commutation quivers.  Window truncations use
the truncation semantics appropriate to each family's poset: lower-set
quotients at the top of a window and idempotent corners at the bottom.
"""

from __future__ import annotations

from .algebra import Arrow, QuiverPresentation, build_algebra
from .exactla import QQ
from .strat import Poset, StratSpec


def _pres(field, vertices, arrows, relations, bound):
    return QuiverPresentation(
        field=field,
        vertices=[str(v) for v in vertices],
        arrows=arrows,
        relations=relations,
        degree_bound=bound,
    )


def example_A(field=QQ, signs=None):
    """Two vertices 1 < 2; loop z at 1, u: 1 -> 2, v: 2 -> 1;
    relations z^2 = uv = vuzv = 0.  Dimension 14."""
    arrows = [Arrow("z", "1", "1"), Arrow("u", "1", "2"), Arrow("v", "2", "1")]
    rels = [
        [(field.one, ("z", "z"))],
        [(field.one, ("u", "v"))],
        [(field.one, ("v", "u", "z", "v"))],
    ]
    alg = build_algebra(_pres(field, ["1", "2"], arrows, rels, 7))
    poset = Poset(["1", "2"], [("1", "2")])  # 1 < 2
    spec = StratSpec(poset, {"1": "1", "2": "2"}, signs or {"1": "+", "2": "+"})
    return alg, spec


def example_B(field=QQ, signs=None):
    """Two vertices 1 > 2; loops s at 1 and t at 2, y: 1 -> 2;
    relations s^2 = t^2 = ty = 0.  Dimension 6."""
    arrows = [Arrow("s", "1", "1"), Arrow("t", "2", "2"), Arrow("y", "1", "2")]
    rels = [
        [(field.one, ("s", "s"))],
        [(field.one, ("t", "t"))],
        [(field.one, ("t", "y"))],
    ]
    alg = build_algebra(_pres(field, ["1", "2"], arrows, rels, 4))
    poset = Poset(["1", "2"], [("2", "1")])  # 2 < 1
    spec = StratSpec(poset, {"1": "1", "2": "2"}, signs or {"1": "+", "2": "+"})
    return alg, spec


def _ladder_arrows(lo, hi, up_name, down_name):
    ups = [Arrow(f"{up_name}{i}", str(i), str(i + 1)) for i in range(lo, hi)]
    downs = [Arrow(f"{down_name}{i}", str(i + 1), str(i)) for i in range(lo, hi)]
    return ups + downs


def _monomial_ladder(field, lo, hi, bound=5):
    """Arrows y_i: i -> i+1 and x_i: i+1 -> i on [lo, hi], with
    y_{i+1} y_i = x_i x_{i+1} = x_i y_i = 0 wherever defined."""
    arrows = _ladder_arrows(lo, hi, "y", "x")
    rels = []
    one = field.one
    for i in range(lo, hi - 1):
        rels.append([(one, (f"y{i+1}", f"y{i}"))])
        rels.append([(one, (f"x{i}", f"x{i+1}"))])
    for i in range(lo, hi):
        rels.append([(one, (f"x{i}", f"y{i}"))])
    return _pres(field, range(lo, hi + 1), arrows, rels, bound)


def _commuting_ladder(field, lo, hi, bound=6):
    """Arrows x_i: i -> i+1 and y_i: i+1 -> i on [lo, hi], with
    x_{i+1} x_i = y_i y_{i+1} = 0 and x_i y_i = y_{i+1} x_{i+1}."""
    arrows = _ladder_arrows(lo, hi, "x", "y")
    rels = []
    one = field.one
    for i in range(lo, hi - 1):
        rels.append([(one, (f"x{i+1}", f"x{i}"))])
        rels.append([(one, (f"y{i}", f"y{i+1}"))])
        rels.append([(one, (f"x{i}", f"y{i}")), (field.neg(one), (f"y{i+1}", f"x{i+1}"))])
    return _pres(field, range(lo, hi + 1), arrows, rels, bound)


def _chain_poset(values, reverse=False):
    vals = [str(v) for v in values]
    covers = [(vals[i], vals[i + 1]) for i in range(len(vals) - 1)]
    if reverse:
        covers = [(b, a) for a, b in covers]
    return Poset(vals, covers)


def semi_infinite(window, field=QQ, signs=None):
    """Corner truncation, to vertices 0..window, of the half-line quiver
    with monomial relations; the weight poset is reversed (0 is largest).

    The corner of the full algebra agrees with the algebra of the naive
    window sub-quiver because the relations are monomial, so the window
    algebra is built directly.  Dimension 4*window + 1.
    """
    alg = build_algebra(_monomial_ladder(field, 0, window))
    poset = _chain_poset(range(window + 1), reverse=True)
    labels = [str(i) for i in range(window + 1)]
    spec = StratSpec(poset, {v: v for v in labels}, signs or {v: "+" for v in labels})
    return alg, spec


def quantum_sl2(window, field=QQ, signs=None):
    """Lower-set quotient, to vertices 0..window, of the commutation-quiver
    algebra on the half line; natural order 0 < 1 < ... .

    Built one step wide and cut down, because killing the idempotent above
    the window also kills the loop that the commutation relation drags
    below it.
    """
    big = build_algebra(_commuting_ladder(field, 0, window + 1))
    alg, _ = big.truncate_lower({str(window + 1)})
    poset = _chain_poset(range(window + 1))
    labels = [str(i) for i in range(window + 1)]
    spec = StratSpec(poset, {v: v for v in labels}, signs or {v: "+" for v in labels})
    return alg, spec


def gl11(lo, hi, field=QQ, signs=None):
    """Interval window [lo, hi] of the commutation quiver on all integers;
    natural order.  Realized as a lower-set quotient at the top of the
    window followed by a corner at the bottom."""
    big = build_algebra(_commuting_ladder(field, lo - 1, hi + 1))
    cut, _ = big.truncate_lower({str(hi + 1)})
    alg = cut.truncate_upper({str(i) for i in range(lo, hi + 1)})
    poset = _chain_poset(range(lo, hi + 1))
    labels = [str(i) for i in range(lo, hi + 1)]
    spec = StratSpec(poset, {v: v for v in labels}, signs or {v: "+" for v in labels})
    return alg, spec


def two_sided_monomial(lo, hi, field=QQ, signs=None):
    """Interval window [lo, hi] of the two-sided zigzag with monomial
    relations; the poset is all integers with the order reversed, so the
    window is a corner at the top and a quotient at the bottom."""
    big = build_algebra(_monomial_ladder(field, lo - 1, hi + 1))
    cut, _ = big.truncate_lower({str(lo - 1)})
    alg = cut.truncate_upper({str(i) for i in range(lo, hi + 1)})
    poset = _chain_poset(range(lo, hi + 1), reverse=True)
    labels = [str(i) for i in range(lo, hi + 1)]
    spec = StratSpec(poset, {v: v for v in labels}, signs or {v: "+" for v in labels})
    return alg, spec


def semisimple_pair(field=QQ, signs=None):
    """k x k: two vertices, no arrows."""
    alg = build_algebra(_pres(field, ["1", "2"], [], [], 2))
    poset = Poset(["1", "2"], [])
    spec = StratSpec(poset, {"1": "1", "2": "2"}, signs or {"1": "+", "2": "+"})
    return alg, spec


def single_point(field=QQ):
    alg = build_algebra(_pres(field, ["1"], [], [], 2))
    poset = Poset(["1"], [])
    return alg, StratSpec(poset, {"1": "1"}, {"1": "+"})


def dual_numbers(field=QQ):
    """k[s]/(s^2) on one vertex."""
    arrows = [Arrow("s", "1", "1")]
    rels = [[(field.one, ("s", "s"))]]
    alg = build_algebra(_pres(field, ["1"], arrows, rels, 3))
    poset = Poset(["1"], [])
    return alg, StratSpec(poset, {"1": "1"}, {"1": "+"})


def get_example(name, field=QQ):
    """Resolve an example name such as "A", "B", "semiinf:3", "qsl2:4",
    "gl11:-2:2", "dzig:-2:2".  Returns (algebra, strat_spec)."""
    parts = name.split(":")
    key = parts[0]
    if key == "A":
        return example_A(field)
    if key == "B":
        return example_B(field)
    if key == "kxk":
        return semisimple_pair(field)
    if key == "point":
        return single_point(field)
    if key == "semiinf":
        return semi_infinite(int(parts[1]), field)
    if key == "qsl2":
        return quantum_sl2(int(parts[1]), field)
    if key == "gl11":
        return gl11(int(parts[1]), int(parts[2]), field)
    if key == "dzig":
        return two_sided_monomial(int(parts[1]), int(parts[2]), field)
    raise KeyError(f"unknown example {name!r}")


EXAMPLE_NAMES = ["A", "B", "kxk", "point", "semiinf:N", "qsl2:N", "gl11:LO:HI", "dzig:LO:HI"]
