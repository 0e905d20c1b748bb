"""Curve models, involutions and curated points; loading and validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

import sympy as sp

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from ..arith.fields import QQ, QuadElem, RingMismatch
from ..arith.poly import BiPoly, Poly
from ..arith.roots import DegenerateInput, rational_roots
from .expr import ExprError, RatFunc, eval_bivariate, eval_bipoly, eval_constant, eval_poly

KINDS = ("P1WithJ", "Conic", "WeightedQuartic", "Hyperelliptic", "PlaneQuartic", "Weierstrass")
SMOOTHNESS_PRIMES = (7, 11, 13, 43)


class CatalogueError(ValueError):
    """Parse or validation failure; the message names the entry and field."""


class InvalidMap(ValueError):
    pass


class ArityError(ValueError):
    pass


@dataclass(frozen=True)
class JMap:
    label: str
    num: Poly
    den: Poly

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __call__(self, x):
        return self.num(x) / self.den(x)


@dataclass(frozen=True)
class InvolutionSpec:
    label: str
    components: tuple  # RatFunc per affine coordinate
    texts: tuple = ()
    j_after: JMap | None = None


@dataclass(frozen=True)
class CuratedPoint:
    tag: str
    coords: tuple
    model: str

    @property
    def field_d(self) -> int | None:
        for c in self.coords:
            if isinstance(c, QuadElem) and c.b:
                return c.d
        return None


@dataclass(frozen=True)
class CuratedDivisor:
    """Formal sum of curated points; ``conj`` marks the Galois conjugate of a quadratic point."""
    tag: str
    terms: tuple  # (point tag, conj, multiplicity)

    @property
    def degree(self) -> int:
        return sum(m for _, _, m in self.terms)


@dataclass(frozen=True)
class CurveModel:
    label: str
    name: str
    kind: str
    claim: str = ""
    jmap: JMap | None = None
    equation: BiPoly | None = None  # affine F(x, y) = 0
    f: Poly | None = None  # y^2 = f(x) for WeightedQuartic / Hyperelliptic
    a: tuple | None = None  # Weierstrass a1, a2, a3, a4, a6
    involutions: tuple = ()
    points: tuple = ()
    divisors: tuple = ()
    cited: dict = field(default_factory=dict)
    reference: str | None = None

    def involution(self, label: str) -> InvolutionSpec:
        for w in self.involutions:
            if w.label == label:
                return w
        raise KeyError(f"{self.label} has no involution {label!r}")

    def point(self, tag: str) -> CuratedPoint:
        for P in self.points:
            if P.tag == tag:
                return P
        raise KeyError(f"{self.label} has no point {tag!r}")

    @property
    def weights(self) -> tuple[int, int]:
        """(weight of y, total degree) of the projective closure used for points."""
        if self.kind == "WeightedQuartic":
            return (2, 4)
        if self.kind == "Hyperelliptic":
            return (3, 6)
        return (1, self.equation.total_degree)

    @property
    def genus(self) -> int:
        if self.kind in ("P1WithJ", "Conic"):
            return 0
        if self.kind in ("WeightedQuartic", "Weierstrass"):
            return 1
        if self.kind == "Hyperelliptic":
            return (self.f.degree - 1) // 2
        d = self.equation.total_degree
        return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class Catalogue:
    curves: dict
    references: dict
    schema: int = 1

    def __getitem__(self, label: str) -> CurveModel:
        try:
            return self.curves[label]
        except KeyError:
            raise KeyError(f"unknown curve {label!r}; known: {', '.join(self.curves)}") from None

    def __iter__(self):
        return iter(self.curves.values())

    def __len__(self) -> int:
        return len(self.curves)

    def labels(self) -> list[str]:
        return list(self.curves)


# -- equations -----------------------------------------------------------------

def weierstrass_bipoly(a) -> BiPoly:
    a1, a2, a3, a4, a6 = (Fraction(v) for v in a)
    return BiPoly({(0, 2): 1, (1, 1): a1, (0, 1): a3, (3, 0): -1, (2, 0): -a2,
                   (1, 0): -a4, (0, 0): -a6}, QQ)


def y2_minus(f: Poly) -> BiPoly:
    t = {(i, 0): -c for i, c in enumerate(f.c)}
    t[(0, 2)] = 1
    return BiPoly(t, QQ)


# -- loading -------------------------------------------------------------------

def _need(entry: dict, key: str, label: str):
    if key not in entry:
        raise CatalogueError(f"entry {label!r}: missing field {key!r}")
    return entry[key]


def _expr(fn, text, label, fieldname):
    try:
        return fn(text)
    except (ExprError, ZeroDivisionError, RingMismatch) as exc:
        raise CatalogueError(f"entry {label!r} field {fieldname!r}: {exc}") from None


def _parse_entry(entry: dict) -> CurveModel:
    label = entry.get("label")
    if not isinstance(label, str) or not label:
        raise CatalogueError(f"curve entry without a label: {sorted(entry)}")
    kind = _need(entry, "kind", label)
    if kind not in KINDS:
        raise CatalogueError(f"entry {label!r} field 'kind': unknown kind {kind!r}")
    kw: dict = dict(label=label, name=entry.get("name", label), kind=kind,
                    claim=entry.get("claim", ""), reference=entry.get("reference"),
                    cited=dict(entry.get("cited", {})))
    if kind == "P1WithJ":
        num = _expr(eval_poly, _need(entry, "j_num", label), label, "j_num")
        den = _expr(eval_poly, _need(entry, "j_den", label), label, "j_den")
        kw["jmap"] = JMap(label, num, den)
    elif kind in ("WeightedQuartic", "Hyperelliptic"):
        key = "quartic" if kind == "WeightedQuartic" else "sextic"
        f = _expr(eval_poly, _need(entry, key, label), label, key)
        kw["f"] = f
        kw["equation"] = y2_minus(f)
    elif kind in ("PlaneQuartic", "Conic"):
        kw["equation"] = _expr(eval_bipoly, _need(entry, "equation", label), label, "equation")
    else:
        a = _need(entry, "a", label)
        if not isinstance(a, list) or len(a) != 5:
            raise CatalogueError(f"entry {label!r} field 'a': need five a-invariants")
        vals = []
        for s in a:
            v = _expr(eval_constant, s, label, "a")
            if not isinstance(v, Fraction):
                raise CatalogueError(f"entry {label!r} field 'a': irrational coefficient {s!r}")
            vals.append(v)
        kw["a"] = tuple(vals)
        kw["equation"] = weierstrass_bipoly(vals)

    ncomp = 1 if kind == "P1WithJ" else 2
    invs = []
    for w in entry.get("involution", []):
        wl = _need(w, "label", label)
        texts = _need(w, "map", label)
        if not isinstance(texts, list) or len(texts) != ncomp:
            raise CatalogueError(f"entry {label!r} involution {wl!r}: need {ncomp} map components")
        comps = tuple(_expr(eval_bivariate, t, label, f"involution {wl}") for t in texts)
        ja = None
        if "j_after" in w:
            n, d = w["j_after"]
            ja = JMap(f"{label}/{wl}", _expr(eval_poly, n, label, "j_after"),
                      _expr(eval_poly, d, label, "j_after"))
        invs.append(InvolutionSpec(wl, comps, tuple(texts), ja))
    kw["involutions"] = tuple(invs)

    pts = []
    for P in entry.get("point", []):
        tag = _need(P, "tag", label)
        coords = tuple(_expr(eval_constant, c, label, f"point {tag}") for c in _need(P, "coords", label))
        pts.append(CuratedPoint(tag, coords, label))
    kw["points"] = tuple(pts)

    divs = []
    for Dv in entry.get("divisor", []):
        tag = _need(Dv, "tag", label)
        terms = []
        for t in _need(Dv, "terms", label):
            if not (isinstance(t, list) and len(t) == 2 and isinstance(t[0], str) and isinstance(t[1], int)):
                raise CatalogueError(f"entry {label!r} divisor {tag!r}: terms are [point, integer]")
            name, conj = t[0], False
            if name.startswith("conj(") and name.endswith(")"):
                name, conj = name[5:-1], True
            terms.append((name, conj, t[1]))
        divs.append(CuratedDivisor(tag, tuple(terms)))
    kw["divisors"] = tuple(divs)
    return CurveModel(**kw)


def validate_model(M: CurveModel) -> None:
    """Raise CatalogueError naming the entry if any invariant of M fails."""
    where = f"entry {M.label!r}"
    if M.kind == "P1WithJ":
        j = M.jmap
        if not j.den:
            raise CatalogueError(f"{where}: j-map denominator is zero")
        if j.num.gcd(j.den).degree > 0:
            raise CatalogueError(f"{where}: j-map numerator and denominator share a factor")
    elif M.kind in ("WeightedQuartic", "Hyperelliptic"):
        want = 4 if M.kind == "WeightedQuartic" else (5, 6)
        if M.f.degree not in ((want,) if isinstance(want, int) else want):
            raise CatalogueError(f"{where}: polynomial has degree {M.f.degree}")
        if not M.f.is_squarefree():
            raise CatalogueError(f"{where}: polynomial is not squarefree")
    elif M.kind == "PlaneQuartic":
        if M.equation.total_degree != 4:
            raise CatalogueError(f"{where}: plane quartic of degree {M.equation.total_degree}")
        bad = [v for v, ok in smoothness(M).items() if not ok]
        if bad:
            raise CatalogueError(f"{where}: plane quartic is singular over {bad}")
    elif M.kind == "Conic":
        from ..arith.conics import TernaryForm
        if M.equation.total_degree != 2 or TernaryForm.from_conic(M.equation).det() == 0:
            raise CatalogueError(f"{where}: conic is degenerate")
    else:
        from ..elliptic.curve import EllCurve
        if EllCurve(M.a).disc == 0:
            raise CatalogueError(f"{where}: Weierstrass discriminant vanishes")
    for P in M.points:
        try:
            ok = on_curve(M, P.coords)
        except (ArityError, RingMismatch) as exc:
            raise CatalogueError(f"{where} point {P.tag!r}: {exc}") from None
        if not ok:
            raise CatalogueError(f"{where} point {P.tag!r} is not on the curve")
    tags = {P.tag: P for P in M.points}
    for Dv in M.divisors:
        mult: dict = {}
        for name, conj, m in Dv.terms:
            if name not in tags:
                raise CatalogueError(f"{where} divisor {Dv.tag!r}: unknown point {name!r}")
            if conj and tags[name].field_d is None:
                raise CatalogueError(f"{where} divisor {Dv.tag!r}: conj() of a rational point")
            mult[(name, conj)] = mult.get((name, conj), 0) + m
        if Dv.degree != 0:
            raise CatalogueError(f"{where} divisor {Dv.tag!r} has degree {Dv.degree}")
        for (name, conj), m in mult.items():
            if tags[name].field_d is not None and mult.get((name, not conj), 0) != m:
                raise CatalogueError(f"{where} divisor {Dv.tag!r} is not Galois stable at {name!r}")


def _read_source(source) -> str:
    if source is None:
        return resources.files("modquad.catalogue").joinpath("data/curves.toml").read_text()
    if isinstance(source, Path):
        return source.read_text()
    if isinstance(source, str) and "\n" not in source and source.endswith(".toml"):
        return Path(source).read_text()
    return source


def load_catalogue(source=None, validate: bool = True) -> Catalogue:
    """Parse a catalogue (built-in when source is None) and validate every entry."""
    text = _read_source(source)
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise CatalogueError(f"parse error: {exc}") from None
    if data.get("schema") != 1:
        raise CatalogueError(f"unsupported schema {data.get('schema')!r}")
    curves = {}
    for entry in data.get("curve", []):
        M = _parse_entry(entry)
        if M.label in curves:
            raise CatalogueError(f"duplicate entry {M.label!r}")
        if validate:
            validate_model(M)
        curves[M.label] = M
    refs = {}
    for r in data.get("reference", []):
        lab = _need(r, "label", "reference")
        refs[lab] = tuple(_expr(eval_constant, s, lab, "a") for s in _need(r, "a", lab))
    for M in curves.values():
        if M.reference is not None and M.reference not in refs:
            raise CatalogueError(f"entry {M.label!r}: unknown reference {M.reference!r}")
    return Catalogue(curves, refs, data["schema"])


@lru_cache(maxsize=1)
def builtin_catalogue() -> Catalogue:
    return load_catalogue()


# -- membership ---------------------------------------------------------------

def _common_ring(coords):
    ds = {c.d for c in coords if isinstance(c, QuadElem) and c.b}
    if len(ds) > 1:
        raise RingMismatch(f"coordinates in different quadratic fields {sorted(ds)}")
    return ds.pop() if ds else None


def _eval_weighted(F: BiPoly, wy: int, deg: int, x, y, z):
    acc = Fraction(0)
    for (i, j), c in F.t.items():
        e = deg - i - wy * j
        if e < 0:
            raise ValueError("polynomial exceeds the weighted degree")
        acc = acc + c * x ** i * y ** j * z ** e
    return acc


def on_curve(M: CurveModel, coords) -> bool:
    """Exact membership of an affine (2 coords) or projective (3 coords) point."""
    coords = tuple(c if isinstance(c, (QuadElem, Fraction)) else Fraction(c) for c in coords)
    _common_ring(coords)
    if M.kind == "P1WithJ":
        if len(coords) not in (1, 2):
            raise ArityError("points on P1 have one coordinate or two homogeneous ones")
        return any(bool(c) for c in coords)
    if len(coords) == 2:
        return not M.equation(*coords)
    if len(coords) != 3:
        raise ArityError(f"{M.kind} points need 2 affine or 3 projective coordinates")
    if not any(bool(c) for c in coords):
        raise ArityError("(0 : 0 : 0) is not a point")
    wy, deg = M.weights
    return not _eval_weighted(M.equation, wy, deg, *coords)


# -- rational maps modulo the curve --------------------------------------------

def _to_y_rows(G: BiPoly) -> list[Poly]:
    return G.as_poly_in_y() if G else []


def _prem_y(G: BiPoly, F: BiPoly) -> list[Poly]:
    """Pseudo-remainder of G by F as polynomials in y over Q[x]."""
    r = _to_y_rows(G)
    f = _to_y_rows(F)
    n = len(f) - 1
    lc = f[-1]
    while len(r) - 1 >= n and r:
        k = len(r) - 1 - n
        top = r[-1]
        r = [c * lc for c in r]
        for i, fc in enumerate(f):
            r[i + k] = r[i + k] - top * fc
        while r and not r[-1]:
            r.pop()
    return r


def zero_on_curve(G: BiPoly, F: BiPoly | None) -> bool:
    """G vanishes on F = 0 (F irreducible), or G = 0 when F is None."""
    if F is None or not G:
        return not G
    return not _prem_y(G, F)


def _eval_rat(P: BiPoly, comps) -> tuple[BiPoly, BiPoly]:
    """P(phi) as (numerator, denominator) polynomials for phi = comps."""
    cx = comps[0]
    cy = comps[1] if len(comps) > 1 else RatFunc(BiPoly.y(P.ring))
    ex, ey = max(P.degree_in(0), 0), max(P.degree_in(1), 0)
    one = BiPoly.const(1, P.ring)
    num = BiPoly({}, P.ring)
    ax = [one]
    dx = [one]
    for _ in range(ex):
        ax.append(ax[-1] * cx.num)
        dx.append(dx[-1] * cx.den)
    by = [one]
    dy = [one]
    for _ in range(ey):
        by.append(by[-1] * cy.num)
        dy.append(dy[-1] * cy.den)
    for (i, j), c in P.t.items():
        num = num + ax[i] * dx[ex - i] * by[j] * dy[ey - j] * c
    return num, dx[ex] * dy[ey]


def _curve_ideal(M: CurveModel) -> BiPoly | None:
    return None if M.kind == "P1WithJ" else M.equation


def involution_check(M: CurveModel, inv: InvolutionSpec) -> bool:
    """inv maps the curve to itself and inv o inv = id on the curve.

    For P1 entries carrying ``j_after`` the relation j o inv = j_after is
    checked as an identity of rational functions as well.
    """
    F = _curve_ideal(M)
    comps = inv.components
    for c in comps:
        if zero_on_curve(c.den, F):
            raise InvalidMap(f"{inv.label}: denominator vanishes identically on {M.label}")
    if F is not None:
        num, _ = _eval_rat(F, comps)
        if not zero_on_curve(num, F):
            return False
    vars_ = (BiPoly.x(QQ), BiPoly.y(QQ))
    for k, c in enumerate(comps):
        n1, d1 = _eval_rat(c.num, comps)
        n2, d2 = _eval_rat(c.den, comps)
        if zero_on_curve(n2 * d1, F):
            raise InvalidMap(f"{inv.label} o {inv.label} is undefined on {M.label}")
        if not zero_on_curve(n1 * d2 - vars_[k] * d1 * n2, F):
            return False
    if inv.j_after is not None:
        j = M.jmap
        n, _ = _eval_rat(BiPoly.from_poly_x(j.num), comps)
        d, _ = _eval_rat(BiPoly.from_poly_x(j.den), comps)
        # degrees of num/den are padded independently, so compare with both pads
        pad = max(j.num.degree, j.den.degree)
        n = n * (comps[0].den ** (pad - j.num.degree))
        d = d * (comps[0].den ** (pad - j.den.degree))
        lhs = n * BiPoly.from_poly_x(inv.j_after.den)
        rhs = d * BiPoly.from_poly_x(inv.j_after.num)
        if lhs != rhs:
            return False
    return True


# -- j-map fibres ----------------------------------------------------------------

def fibre_polynomial(j: JMap, j0) -> Poly:
    """num - j0*den, cutting out the affine fibre of j over j0."""
    return j.num - j.den.scale(Fraction(j0))


def ramification_divides(fibre: Poly, candidate: Poly) -> bool:
    if not candidate:
        raise DegenerateInput("zero candidate")
    return candidate.divides(fibre)


def compose_jmap(j: JMap, sub: Poly, label: str | None = None) -> JMap:
    """j(sub(x)) as a reduced fraction."""
    n, d = j.num.compose(sub), j.den.compose(sub)
    g = n.gcd(d)
    if g.degree > 0:
        n, d = n.exact_div(g), d.exact_div(g)
    c = d.lc()
    return JMap(label or j.label, n.scale(1 / c), d.scale(1 / c))


# -- fixed points ----------------------------------------------------------------

@dataclass(frozen=True)
class FixedPoint:
    """Fixed points whose x (or line parameter) is a root of ``minpoly``.

    ``count`` is the number of geometric points described; ``where`` names
    the chart ('affine', 'infinity', 'line ...').
    """

    where: str
    minpoly: Poly | None
    count: int
    note: str = ""


@dataclass(frozen=True)
class FixedLocus:
    entire_curve: bool
    points: tuple = ()

    @property
    def count(self) -> int:
        if self.entire_curve:
            raise ValueError("fixed locus is the entire curve")
        return sum(p.count for p in self.points)


def _sym(f: Poly, s):
    return sum((sp.Rational(c.numerator, c.denominator) * s ** i for i, c in enumerate(f.c)), sp.Integer(0))


def factor_qq(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicities (sympy)."""
    s = sp.Symbol("s")
    _, facs = sp.factor_list(_sym(f, s), s)
    out = []
    for g, m in facs:
        cs = sp.Poly(g, s).all_coeffs()[::-1]
        out.append((Poly([Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in cs], QQ).monic(), m))
    return out


def _is_identity(comps) -> bool:
    xs = (BiPoly.x(QQ), BiPoly.y(QQ))
    return all(c.num == xs[k] * c.den for k, c in enumerate(comps))


def _as_univariate(b: BiPoly) -> Poly | None:
    if b.degree_in(1) > 0:
        return None
    return Poly([b.coeff(i, 0) for i in range(b.degree_in(0) + 1)], QQ)


def fixed_points(M: CurveModel, inv: InvolutionSpec) -> FixedLocus:
    comps = inv.components
    if _is_identity(comps):
        return FixedLocus(True)
    if M.kind == "P1WithJ":
        return _fixed_p1(comps[0])
    if M.kind in ("WeightedQuartic", "Hyperelliptic"):
        return _fixed_double_cover(M, comps)
    if M.kind == "PlaneQuartic":
        return _fixed_plane(M, comps)
    raise NotImplementedError(f"fixed points on {M.kind} models")


def _fixed_p1(c: RatFunc) -> FixedLocus:
    A, D = _as_univariate(c.num), _as_univariate(c.den)
    g = A - Poly.x() * D
    pts = [FixedPoint("affine", h, h.degree) for h, _ in factor_qq(g)]
    # infinity is fixed iff deg A > deg D
    if A.degree > D.degree:
        pts.append(FixedPoint("infinity", None, 1))
    return FixedLocus(False, tuple(pts))


def _fixed_double_cover(M: CurveModel, comps) -> FixedLocus:
    """Maps (a(x), y*b(x)) on y^2 = f(x)."""
    cx, cy = comps
    A, D = _as_univariate(cx.num), _as_univariate(cx.den)
    if A is None or D is None:
        raise NotImplementedError("x-component must depend on x only")
    ynum = cy.num
    if any(j != 1 for (_, j) in ynum.t) or cy.den.degree_in(1) > 0:
        raise NotImplementedError("y-component must be y times a function of x")
    B = Poly([ynum.coeff(i, 1) for i in range(ynum.degree_in(0) + 1)], QQ)
    E = _as_univariate(cy.den)
    f = M.f
    g_ = 2 if M.kind == "WeightedQuartic" else 3  # weight of y
    pts = []
    g = A - Poly.x() * D
    if not g:
        # x fixed everywhere: points with y*b = y
        if B == E:
            return FixedLocus(True)
        if (B + E).is_zero():
            for h, _ in factor_qq(f):
                pts.append(FixedPoint("affine", h, h.degree, "y = 0"))
        else:
            raise NotImplementedError("y-multiplier must be constant +-1 when x is fixed")
    else:
        for h, _ in factor_qq(g):
            plus = not ((B - E) % h)
            root_of_f = not (f % h)
            if plus:
                n = 1 if root_of_f else 2
                pts.append(FixedPoint("affine", h, n * h.degree, "both y-values" if n == 2 else "y = 0"))
            elif root_of_f:
                pts.append(FixedPoint("affine", h, h.degree, "y = 0"))
    # points at infinity (1 : +-sqrt(lc) : 0) when deg f = 2*weight
    if f.degree == 2 * g_ and A.degree > D.degree:
        # in the chart v = y/x^g the map sends v to v * b x^g / a^g; its value
        # at infinity is +1 (both points fixed) or -1 (swapped)
        sign = None
        if B.degree + g_ * D.degree + g_ == E.degree + g_ * A.degree:
            sign = (B.lc() * D.lc() ** g_) / (E.lc() * A.lc() ** g_)
        if sign == 1:
            pts.append(FixedPoint("infinity", None, 2, "both points at infinity fixed"))
        elif sign == -1:
            pts.append(FixedPoint("infinity", None, 0, "the two points at infinity are swapped"))
    return FixedLocus(False, tuple(pts))


def projective_matrix(comps) -> list[list[Fraction]] | None:
    """3x3 matrix of a map (L1/L3, L2/L3) with L_i linear forms, else None."""
    den = comps[0].den
    key = next(iter(den.t))
    out = []
    for c in comps:
        if c.num.total_degree > 1 or c.den.total_degree > 1:
            return None
        if key not in c.den.t:
            return None
        k = den.t[key] / c.den.t[key]  # c = (k * num) / den
        if c.den * k != den:
            return None
        out.append([c.num.coeff(1, 0) * k, c.num.coeff(0, 1) * k, c.num.coeff(0, 0) * k])
    out.append([den.coeff(1, 0), den.coeff(0, 1), den.coeff(0, 0)])
    return out


def _nullspace(Mx) -> list[list[Fraction]]:
    S = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row] for row in Mx])
    out = []
    for v in S.nullspace():
        den = sp.ilcm(*[sp.fraction(t)[1] for t in v])
        out.append([Fraction(int(t * den)) for t in v])
    return out


def _fixed_plane(M: CurveModel, comps) -> FixedLocus:
    Mx = projective_matrix(comps)
    if Mx is None:
        raise NotImplementedError("fixed points need a projectively linear map")
    S = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row] for row in Mx])
    lam = sp.Symbol("lam")
    cp = sp.Poly(S.charpoly(lam).as_expr(), lam)
    cpoly = Poly([Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in cp.all_coeffs()[::-1]], QQ)
    eig = sorted(set(rational_roots(cpoly)))
    if sum(m for r, m in ((r, rational_roots(cpoly).count(r)) for r in eig)) != 3:
        raise NotImplementedError("map has irrational eigenvalues")
    F = M.equation
    pts = []
    for ev in eig:
        A = [[Mx[i][j] - (ev if i == j else 0) for j in range(3)] for i in range(3)]
        basis = _nullspace(A)
        if len(basis) == 1:
            v = basis[0]
            if on_curve(M, v):
                pts.append(FixedPoint(f"eigenpoint {tuple(int(t) for t in v)}", None, 1))
        elif len(basis) == 2:
            v1, v2 = basis
            # F(s*v1 + v2) as a quartic in s, plus s = infinity (the point v1)
            s = sp.Symbol("s")
            X = [s * v1[i] + v2[i] for i in range(3)]
            H = sum(sp.Rational(c.numerator, c.denominator) * X[0] ** i * X[1] ** j * X[2] ** (4 - i - j)
                    for (i, j), c in F.t.items())
            hp = sp.Poly(sp.expand(H), s)
            cs = [Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in hp.all_coeffs()[::-1]]
            h = Poly(cs, QQ)
            line = _line_equation(v1, v2)
            for g, _ in factor_qq(h):
                pts.append(FixedPoint(f"line {line}", g, g.degree, "parameter s on s*v1 + v2"))
            if h.degree < 4:
                pts.append(FixedPoint(f"line {line}", None, 1, "the point v1"))
        elif len(basis) == 3:
            return FixedLocus(True)
    return FixedLocus(False, tuple(pts))


def _line_equation(v1, v2) -> str:
    a = v1[1] * v2[2] - v1[2] * v2[1]
    b = v1[2] * v2[0] - v1[0] * v2[2]
    c = v1[0] * v2[1] - v1[1] * v2[0]
    ks = [int(k) for k in (a, b, c)]
    if next(k for k in ks if k) < 0:
        ks = [-k for k in ks]
    out = ""
    for k, v in zip(ks, "xyz"):
        if not k:
            continue
        mag = "" if abs(k) == 1 else str(abs(k))
        if not out:
            out = ("-" if k < 0 else "") + mag + v
        else:
            out += (" - " if k < 0 else " + ") + mag + v
    return out + " = 0"


# -- smoothness --------------------------------------------------------------------

def bipoly_to_sympy(F: BiPoly, x, y, z=None, deg: int | None = None):
    out = sp.Integer(0)
    for (i, j), c in F.t.items():
        t = sp.Rational(c.numerator, c.denominator) * x ** i * y ** j
        if z is not None:
            t *= z ** (deg - i - j)
        out += t
    return out


def is_smooth_plane(F: BiPoly, p: int = 0) -> bool:
    """No common zero of the three partials of the homogenized F over Qbar (p = 0) or Fpbar."""
    x, y, z = sp.symbols("x y z")
    d = F.total_degree
    if p and d % p == 0:
        raise ValueError("Euler relation needs p not dividing the degree")
    H = bipoly_to_sympy(F, x, y, z, d)
    parts = [sp.diff(H, v) for v in (x, y, z)]
    opts = {"modulus": p} if p else {}
    for chart in (z, y, x):
        eqs = [sp.expand(e.subs(chart, 1)) for e in parts]
        vs = [v for v in (x, y, z) if v != chart]
        G = sp.groebner(eqs, *vs, order="grevlex", **opts)
        if list(G.exprs) != [1]:
            return False
    return True


def smoothness(M: CurveModel, primes=SMOOTHNESS_PRIMES) -> dict:
    """{0: over Q, p: over F_p} for a plane quartic."""
    if M.kind != "PlaneQuartic":
        raise ValueError("smoothness check is for plane quartics")
    out = {"Q": is_smooth_plane(M.equation)}
    for p in primes:
        out[p] = is_smooth_plane(M.equation, p)
    return out
