"""Exact evaluation of the density and crossing-number bounds.

Irrational constants are kept symbolic as ``root(radicand, degree)`` and
compared with rationals by integer powering; decimals only appear when a
value is rendered, and then with an explicit rounding direction (up for
upper bounds, down for lower bounds).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

SETTINGS = ("unrestricted", "c3free", "c4free", "girth5")
DIRECTIONS = ("density_upper", "density_lower", "cr_upper", "cr_lower")


class Unavailable(LookupError):
    """The requested cell is blank, marked "-", or only known from the literature."""


class NonPositiveCoefficient(ValueError):
    pass


# --------------------------------------------------------------------------
# exact roots


def iroot_floor(x: int, d: int) -> int:
    """Largest integer r with r**d <= x (x >= 0)."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + d - 1) // d)
    while True:
        s = ((d - 1) * r + x // r ** (d - 1)) // d
        if s >= r:
            break
        r = s
    while r ** d > x:
        r -= 1
    while (r + 1) ** d <= x:
        r += 1
    return r


@dataclass(frozen=True)
class RootConstant:
    """The positive real ``radicand ** (1/degree)``."""

    radicand: Fraction
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.radicand <= 0:
            raise ValueError("radicand must be positive")
        if self.degree not in (2, 3):
            raise ValueError("only square and cube roots are used")

    def scaled_floor(self, scale: int) -> int:
        """floor(root * scale) for a positive integer scale, exactly."""
        r = self.radicand
        return iroot_floor(r.numerator * scale ** self.degree // r.denominator, self.degree)

    def scaled_ceil(self, scale: int) -> int:
        lo = self.scaled_floor(scale)
        return lo if Fraction(lo, scale) ** self.degree == self.radicand else lo + 1

    def enclosure(self, digits: int = 7) -> tuple[Fraction, Fraction]:
        """Rationals lo <= root <= hi with hi - lo <= 10**-digits."""
        s = 10 ** digits
        return Fraction(self.scaled_floor(s), s), Fraction(self.scaled_ceil(s), s)

    def compare(self, q: Fraction) -> int:
        """Sign of root - q."""
        q = Fraction(q)
        if q <= 0:
            return 1
        p = q ** self.degree
        return (self.radicand > p) - (self.radicand < p)

    def __float__(self) -> float:
        lo, hi = self.enclosure(15)
        return float((lo + hi) / 2)

    def __str__(self) -> str:
        name = "sqrt" if self.degree == 2 else "cbrt"
        return f"{name}({_fmt(self.radicand)})"


Scalar = Union[Fraction, RootConstant]


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_decimal(value: Scalar, digits: int, direction: str = "up") -> str:
    """Decimal string with ``digits`` places, rounded ``up`` or ``down`` (or ``nearest``)."""
    s = 10 ** digits
    if isinstance(value, RootConstant):
        lo, hi = value.scaled_floor(s), value.scaled_ceil(s)
        if direction == "nearest":
            # root >= (lo + 1/2)/s  iff  root**d >= ((2 lo + 1)/(2 s))**d
            n = hi if value.compare(Fraction(2 * lo + 1, 2 * s)) >= 0 else lo
        else:
            n = hi if direction == "up" else lo
    else:
        v = Fraction(value) * s
        if direction == "up":
            n = -((-v.numerator) // v.denominator)
        elif direction == "down":
            n = v.numerator // v.denominator
        else:
            n = round(v)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, s)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


# --------------------------------------------------------------------------
# crossing lemma machinery


def crossing_lemma_coefficient(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """From cr(H) >= a*m - b*n on a hereditary class: cr >= c m^3/n^2 once m >= t n.

    Returns ``(c, t)`` with ``c = 4a^3 / 27b^2`` and ``t = 3b / 2a``.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise NonPositiveCoefficient("a and b must be positive")
    return 4 * a ** 3 / (27 * b ** 2), 3 * b / (2 * a)


@dataclass(frozen=True)
class Affine:
    """``slope * n + intercept``."""

    slope: Fraction
    intercept: Fraction = Fraction(0)

    def __call__(self, n) -> Fraction:
        return self.slope * n + self.intercept

    def __str__(self) -> str:
        s = f"{_fmt(self.slope)}n"
        if self.intercept:
            s += f" {'+' if self.intercept > 0 else '-'} {_fmt(abs(self.intercept))}"
        return s


def _aff(slope, const=0) -> Affine:
    return Affine(Fraction(slope), Fraction(const))


# Edge bounds mu_i(n) for i-planar graphs of each class, in the order used by
# the naive removal bound.  The last C4-free and girth-5 entries are rational
# upper bounds on cube-root constants (the 2-planar density bounds).
MU = {
    "c3free": (_aff(2, -4), _aff(3, -6), _aff(4, -8)),
    "c4free": (_aff(Fraction(15, 7), Fraction(-30, 7)), _aff(Fraction(5, 2), -5), _aff(Fraction(3929, 1000))),
    "girth5": (_aff(Fraction(5, 3), Fraction(-10, 3)), _aff(Fraction(12, 5)), _aff(Fraction(3597, 1000))),
}


def mu_list(setting: str, k: int) -> tuple[Affine, ...]:
    if setting not in MU:
        raise Unavailable(f"no mu list for {setting!r}")
    if not 1 <= k <= len(MU[setting]):
        raise Unavailable(f"mu list for {setting} covers k <= {len(MU[setting])}")
    return MU[setting][:k]


def naive_cr_lower(k: int, mu: Sequence[Affine], n, m) -> Fraction:
    """k*m - sum_i mu_i(n): crossings left after greedy removal down to a plane drawing."""
    if k < 1 or len(mu) != k:
        raise ValueError("need k >= 1 and exactly k mu bounds")
    return k * Fraction(m) - sum((f(n) for f in mu), Fraction(0))


def naive_coefficients(mu: Sequence[Affine]) -> tuple[int, Fraction]:
    """(a, b) of the linear form a*m - b*n (additive constants dropped)."""
    return len(mu), sum((f.slope for f in mu), Fraction(0))


def cr_upper_slope(k: int) -> Fraction:
    if k == 2:
        return Fraction(10, 3)
    if k == 3:
        return Fraction(33, 5)
    raise Unavailable(f"no crossing-number upper bound for k={k} beyond the trivial km/2")


def cr_upper(k: int, n) -> Fraction:
    """(10n - 20)/3 for k = 2, (33n - 66)/5 for k = 3."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return cr_upper_slope(k) * (Fraction(n) - 2)


def derive_cubic_density(c: Fraction, u: Fraction) -> RootConstant:
    """c m^3/n^2 <= u n  iff  m <= cbrt(u/c) n."""
    c, u = Fraction(c), Fraction(u)
    if c <= 0 or u <= 0:
        raise NonPositiveCoefficient("c and u must be positive")
    return RootConstant(u / c, 3)


def sqrt_k_radicand(c: Fraction) -> Fraction:
    """k m / 2 >= c m^3/n^2  iff  m <= sqrt(k / 2c) n; returns 1/(2c)."""
    return 1 / (2 * Fraction(c))


def optimal_p(a, b, n, m) -> tuple[Fraction, bool]:
    """Maximiser 3bn/(2am) of the sampled bound; the flag is True when it exceeds 1."""
    p = 3 * Fraction(b) * Fraction(n) / (2 * Fraction(a) * Fraction(m))
    return p, p > 1


# crossing-lemma inputs per class: (a, b) as produced by the naive bound
def lemma_inputs(setting: str) -> tuple[int, Fraction]:
    if setting == "c3free":
        return naive_coefficients(MU["c3free"][:3])
    if setting in ("c4free", "girth5"):
        return naive_coefficients(MU[setting][:2])
    raise Unavailable(f"no crossing lemma derived for {setting!r}")


# --------------------------------------------------------------------------
# bound constants and reports


@dataclass(frozen=True)
class BoundSpec:
    k: Optional[int]  # None means symbolic k
    setting: str
    direction: str

    def __post_init__(self):
        if self.setting not in SETTINGS:
            raise ValueError(f"unknown setting {self.setting!r}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}")


@dataclass(frozen=True)
class BoundConstant:
    value: Scalar
    form: str  # "density" (value*n), "sqrt_k_density" (value*sqrt(k)*n), "cr_linear", "cr_cubic" (value*m^3/n^2)
    provenance: str
    affine: Optional[Affine] = None  # full affine form when one is known
    coefficients: dict = field(default_factory=dict)
    threshold: Optional[Fraction] = None  # applies when m >= threshold * n

    @property
    def kind(self) -> str:
        return "root" if isinstance(self.value, RootConstant) else "rational"

    def describe(self) -> str:
        v = str(self.value) if self.kind == "root" else _fmt(self.value)
        suffix = {"density": "n", "sqrt_k_density": "sqrt(k) n", "cr_linear": "n", "cr_cubic": "m^3/n^2"}[self.form]
        return f"{v} {suffix}"

    def enclosure(self, digits: int = 7) -> tuple[Fraction, Fraction]:
        if self.kind == "root":
            return self.value.enclosure(digits)
        return Fraction(self.value), Fraction(self.value)

    def to_json(self) -> dict:
        lo, hi = self.enclosure()
        out = {
            "kind": self.kind,
            "form": self.form,
            "constant": str(self.value) if self.kind == "root" else _fmt(self.value),
            "enclosure": [_fmt(lo), _fmt(hi)],
            "provenance": self.provenance,
        }
        if self.kind == "root":
            out["radicand"] = _fmt(self.value.radicand)
            out["degree"] = self.value.degree
        if self.affine is not None:
            out["affine"] = str(self.affine)
        if self.coefficients:
            out["coefficients"] = {k: _fmt(Fraction(v)) for k, v in self.coefficients.items()}
        if self.threshold is not None:
            out["threshold"] = _fmt(self.threshold)
        return out


def _euler(girth: int) -> Affine:
    # plane graphs with all faces of length >= g: m <= g/(g-2) (n-2)
    s = Fraction(girth, girth - 2)
    return Affine(s, -2 * s)


def _cubic(setting: str, k: int) -> BoundConstant:
    a, b = lemma_inputs(setting)
    c, t = crossing_lemma_coefficient(a, b)
    u = cr_upper_slope(k)
    return BoundConstant(
        derive_cubic_density(c, u),
        "density",
        f"crossing lemma (a={a}, b={_fmt(b)}) against cr <= ({_fmt(u)})n",
        coefficients={"a": a, "b": b, "c": c, "cr_slope": u},
    )


def density_upper_constant(k: int, setting: str) -> BoundConstant:
    table = {
        (0, "unrestricted"): lambda: BoundConstant(Fraction(3), "density", "Euler's formula", _euler(3)),
        (0, "c3free"): lambda: BoundConstant(Fraction(2), "density", "Euler's formula", _euler(4)),
        (0, "girth5"): lambda: BoundConstant(Fraction(5, 3), "density", "Euler's formula", _euler(5)),
        (0, "c4free"): lambda: BoundConstant(Fraction(15, 7), "density", "literature (planar C4-free)", Affine(Fraction(15, 7), Fraction(-30, 7))),
        (1, "c3free"): lambda: BoundConstant(Fraction(3), "density", "density formula with t=3", _aff(3, -6)),
        (1, "c4free"): lambda: BoundConstant(Fraction(5, 2), "density", "discharging with alpha=4/5", _aff(Fraction(5, 2), -5)),
        (1, "girth5"): lambda: BoundConstant(Fraction(12, 5), "density", "discharging with alpha=5/6", _aff(Fraction(12, 5), Fraction(-24, 5))),
        (2, "c3free"): lambda: BoundConstant(Fraction(4), "density", "discharging with alpha=1/2", _aff(4, -8)),
        (2, "c4free"): lambda: _cubic("c4free", 2),
        (2, "girth5"): lambda: _cubic("girth5", 2),
        (3, "c3free"): lambda: _cubic("c3free", 3),
        (3, "c4free"): lambda: _cubic("c4free", 3),
        (3, "girth5"): lambda: _cubic("girth5", 3),
    }
    if (k, setting) not in table:
        raise Unavailable(f"no derived upper bound for k={k}, {setting}")
    return table[(k, setting)]()


def density_lower_constant(k: int, setting: str) -> BoundConstant:
    from .constructions import ASYMPTOTIC_DENSITY

    euler = {"unrestricted": 3, "c3free": 2, "girth5": Fraction(5, 3)}
    if k == 0 and setting in euler:
        return BoundConstant(Fraction(euler[setting]), "density", "Euler's formula (tight)")
    family = {
        (1, "c4free"): "c4free-1planar",
        (1, "girth5"): "girth5-1planar",
        (2, "c4free"): "c4free-2planar",
        (2, "girth5"): "girth5-2planar",
        (3, "girth5"): "girth5-3planar",
    }.get((k, setting))
    if family is None:
        raise Unavailable(f"no derived lower bound for k={k}, {setting}")
    return BoundConstant(ASYMPTOTIC_DENSITY[family], "density", f"construction {family}")


def density_upper_general_k(setting: str, k: Optional[int] = None) -> BoundConstant:
    if setting not in ("c3free", "c4free", "girth5"):
        raise Unavailable("the unrestricted general-k constant is a literature value")
    a, b = lemma_inputs(setting)
    c, t = crossing_lemma_coefficient(a, b)
    r = sqrt_k_radicand(c)
    value = RootConstant(r * k, 2) if k is not None else RootConstant(r, 2)
    return BoundConstant(
        value,
        "density" if k is not None else "sqrt_k_density",
        f"crossing lemma (a={a}, b={_fmt(b)}) against cr <= km/2",
        coefficients={"a": a, "b": b, "c": c},
        threshold=t,
    )


def cr_lower_constant(setting: str) -> BoundConstant:
    if setting == "unrestricted":
        raise Unavailable("the unrestricted crossing lemma constant is a literature value")
    a, b = lemma_inputs(setting)
    c, t = crossing_lemma_coefficient(a, b)
    return BoundConstant(c, "cr_cubic", f"crossing lemma with a={a}, b={_fmt(b)}", coefficients={"a": a, "b": b}, threshold=t)


def cr_upper_constant(k: int) -> BoundConstant:
    u = cr_upper_slope(k)
    return BoundConstant(u, "cr_linear", f"crossing-number bound for {k}-planar graphs", Affine(u, -2 * u))


def constant_for(spec: BoundSpec) -> BoundConstant:
    if spec.direction == "density_upper":
        if spec.k is None:
            return density_upper_general_k(spec.setting)
        return density_upper_constant(spec.k, spec.setting)
    if spec.direction == "density_lower":
        if spec.k is None:
            raise Unavailable("no derived general-k lower bound")
        return density_lower_constant(spec.k, spec.setting)
    if spec.direction == "cr_upper":
        if spec.setting != "unrestricted" or spec.k is None:
            raise Unavailable("crossing-number upper bounds are stated for unrestricted 2- and 3-planar graphs")
        return cr_upper_constant(spec.k)
    if spec.k is not None and spec.k not in (2, 3):
        raise Unavailable("crossing lemma bounds are listed for general graphs")
    return cr_lower_constant(spec.setting)


@dataclass(frozen=True)
class BoundReport:
    spec: BoundSpec
    constant: BoundConstant
    n: Optional[int]
    bound: Optional[tuple[Fraction, Fraction]]  # certified enclosure of the evaluated bound
    applicable: Optional[bool] = None  # density precondition m >= threshold n, when m was given

    def to_json(self) -> dict:
        out = {
            "k": self.spec.k if self.spec.k is not None else "k",
            "setting": self.spec.setting,
            "direction": self.spec.direction,
            "constant": self.constant.to_json(),
        }
        if self.n is not None:
            out["n"] = self.n
        if self.bound is not None:
            out["bound"] = [_fmt(self.bound[0]), _fmt(self.bound[1])]
            up = self.spec.direction.endswith("upper")
            out["bound_decimal"] = render_decimal(self.bound[1] if up else self.bound[0], 3, "up" if up else "down")
        if self.applicable is not None:
            out["applicable"] = self.applicable
        return out


def evaluate(spec: BoundSpec, n: Optional[int] = None, m: Optional[int] = None) -> BoundReport:
    """Constant for the cell plus, given n (and m for cubic forms), a certified numeric bound."""
    c = constant_for(spec)
    bound = None
    if n is not None:
        if c.form == "cr_cubic":
            if m is not None:
                v = Fraction(c.value) * Fraction(m) ** 3 / Fraction(n) ** 2
                bound = (v, v)
        elif c.affine is not None and spec.direction != "density_lower" and c.kind == "rational":
            v = c.affine(n)
            bound = (v, v)
        else:
            lo, hi = c.enclosure(9)
            bound = (lo * n, hi * n)
    applicable = None
    if c.threshold is not None and m is not None and n is not None:
        applicable = Fraction(m) >= c.threshold * n
    return BoundReport(spec, c, n, bound, applicable)


# --------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class Cell:
    row: str
    column: str
    status: str  # "derived", "cited", "unavailable"
    text: str  # rendered cell as printed in the table
    constant: Optional[BoundConstant] = None
    printed: Optional[str] = None  # the value the published table prints, when it is a decimal
    stated: Optional[str] = None  # the sharper decimal stated alongside the bound
    note: Optional[str] = None
    flag: Optional[str] = None

    def to_json(self) -> dict:
        out = {"row": self.row, "column": self.column, "status": self.status, "text": self.text}
        if self.constant is not None:
            out["constant"] = self.constant.to_json()
        for key in ("printed", "stated", "note", "flag"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        return out


def _density_text(c: BoundConstant, digits: Optional[int], up: bool) -> str:
    v = c.value
    if isinstance(v, Fraction) and digits is None:
        if v.denominator == 1:
            return f"{v.numerator}n"
        return f"{v.numerator}n/{v.denominator}"
    return render_decimal(v, digits if digits is not None else 3, "up" if up else "down") + "n"


# (k, setting, upper?) -> (digits printed in the table, digits stated with the bound); None = exact fraction
_T1_DIGITS = {
    (1, "c4free", False): 1,
    (1, "c4free", True): 1,
    (1, "girth5", True): 1,
    (2, "c4free", False): 1,
    (2, "c4free", True): (2, 3),
    (2, "girth5", True): (3, 3),
    (3, "c3free", True): (2, 3),
    (3, "c4free", True): (3, 3),
    (3, "girth5", False): 1,
    (3, "girth5", True): (3, 3),
}

_T1_CITED = {
    (1, "unrestricted", False): "4n", (1, "unrestricted", True): "4n",
    (2, "unrestricted", False): "5n", (2, "unrestricted", True): "5n",
    (3, "unrestricted", False): "5.5n", (3, "unrestricted", True): "5.5n",
    (1, "c3free", False): "3n",
    (2, "c3free", False): "3.5n",
    (3, "c3free", False): "4n",
    (0, "c4free", False): "15n/7", (0, "c4free", True): "15n/7",
    ("k", "unrestricted", False): "Omega(sqrt(k))n", ("k", "unrestricted", True): "3.81sqrt(k)n",
}

_SQRT_DIGITS = {"c3free": (2, 3), "c4free": (3, 3), "girth5": (3, 3)}


def _table1() -> list[Cell]:
    cells = []
    for k in (0, 1, 2, 3, "k"):
        for setting in SETTINGS:
            for up in (False, True):
                col = f"{setting} {'upper' if up else 'lower'}"
                key = (k, setting, up)
                if key in _T1_CITED:
                    cells.append(Cell(str(k), col, "cited", _T1_CITED[key]))
                    continue
                if k == "k":
                    if not up:
                        cells.append(Cell("k", col, "unavailable", ""))
                        continue
                    c = density_upper_general_k(setting)
                    tdig, sdig = _SQRT_DIGITS[setting]
                    printed = render_decimal(c.value, tdig, "up")
                    stated = render_decimal(c.value, sdig, "up")
                    nearest = render_decimal(c.value, tdig, "nearest")
                    flag = None
                    if printed != nearest:
                        flag = f"table rounds up to {printed}; to {tdig} places the constant rounds to {nearest}"
                        if stated != printed:
                            flag += f"; the sharper statement is {stated}"
                    cells.append(Cell("k", col, "derived", f"{printed}sqrt(k)n", c, printed, stated, flag=flag))
                    continue
                try:
                    c = density_upper_constant(k, setting) if up else density_lower_constant(k, setting)
                except Unavailable:
                    if (k, setting, up) == (3, "c4free", False):
                        c2 = density_lower_constant(2, setting)
                        cells.append(
                            Cell("3", col, "unavailable", "-", note=f"the 2-planar lower bound {_density_text(c2, 1, False)} also holds for 3-planar graphs")
                        )
                    else:
                        cells.append(Cell(str(k), col, "unavailable", "-"))
                    continue
                spec = _T1_DIGITS.get(key)
                if isinstance(spec, tuple):
                    tdig, sdig = spec
                    printed = render_decimal(c.value, tdig, "up")
                    stated = render_decimal(c.value, sdig, "up")
                    nearest = render_decimal(c.value, tdig, "nearest")
                    flag = None
                    if printed != nearest:
                        flag = f"table rounds up to {printed}; to {tdig} places the constant rounds to {nearest}"
                    cells.append(Cell(str(k), col, "derived", printed + "n", c, printed, stated, flag=flag))
                else:
                    text = _density_text(c, spec, up)
                    cells.append(Cell(str(k), col, "derived", text, c))
    return cells


def _table2() -> list[Cell]:
    cells = []
    for k in (2, 3):
        c = cr_upper_constant(k)
        text = f"{c.value.numerator}n/{c.value.denominator}"
        cells.append(Cell(f"{k}-planar", "unrestricted upper", "derived", text, c))
        for col in ("unrestricted lower", "c3free lower", "c4free lower", "girth5 lower"):
            cells.append(Cell(f"{k}-planar", col, "unavailable", ""))
    cells.append(Cell("general", "unrestricted lower", "cited", "0.034m^3/n^2"))
    cells.append(Cell("general", "unrestricted upper", "unavailable", ""))
    for setting in ("c3free", "c4free", "girth5"):
        c = cr_lower_constant(setting)
        printed = render_decimal(c.value, 3, "down")
        cells.append(Cell("general", f"{setting} lower", "derived", f"{printed}m^3/n^2", c, printed))
    return cells


def table_report() -> dict:
    return {
        "table1": [c.to_json() for c in _table1()],
        "table2": [c.to_json() for c in _table2()],
        "rounding": "upper bounds rounded up, lower bounds rounded down",
    }


def render_text(report: dict) -> str:
    lines = []
    for name, title in (("table1", "Maximum edge density of k-planar classes"), ("table2", "Crossing-number bounds")):
        lines.append(title)
        cells = report[name]
        cols = list(dict.fromkeys(c["column"] for c in cells))
        rows = list(dict.fromkeys(c["row"] for c in cells))
        grid = {(c["row"], c["column"]): c for c in cells}
        width = max(14, *(len(c) for c in cols), *(len(c["text"]) + 10 for c in cells))
        lines.append("".join(["k".ljust(10)] + [c.ljust(width + 2) for c in cols]).rstrip())
        notes = []
        for r in rows:
            row = [r.ljust(10)]
            for col in cols:
                cell = grid.get((r, col))
                text = "" if cell is None else cell["text"] + (" [cited]" if cell["status"] == "cited" else "")
                if cell is not None and cell.get("stated") not in (None, cell.get("printed")):
                    text += f" ({cell['stated']})"
                if cell is not None and ("flag" in cell or "note" in cell):
                    text += " *"
                    notes.append(f"  * {r} / {col}: {cell.get('flag') or cell.get('note')}")
                row.append(text.ljust(width + 2))
            lines.append("".join(row).rstrip())
        lines.extend(notes)
        lines.append("")
    lines.append(report["rounding"])
    return "\n".join(lines)


# --------------------------------------------------------------------------
# the published identities


def cube_root_radicands() -> dict[str, Fraction]:
    """All five cube-root radicands, derived from (a, b, cr slope)."""
    return {
        f"{s} k={k}": derive_cubic_density(crossing_lemma_coefficient(*lemma_inputs(s))[0], cr_upper_slope(k)).radicand
        for s, k in (("c4free", 2), ("girth5", 2), ("c3free", 3), ("c4free", 3), ("girth5", 3))
    }


def sqrt_k_radicands() -> dict[str, Fraction]:
    return {s: sqrt_k_radicand(crossing_lemma_coefficient(*lemma_inputs(s))[0]) for s in ("c3free", "c4free", "girth5")}
