"""Exact affine-span pregeometry with rank, closure, and greedy basis extraction.

Elements are affine-rational combinations of abstract generators.  The
closure of a set is its affine span over the rationals, so scalars belong to
every closed set.  Closure membership and rank are computed by exact
Gaussian elimination; a brute-force subset oracle cross-checks the rank on
small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

__all__ = [
    "TooLargeError",
    "InvariantNotDefinableError",
    "AffineForm",
    "generator",
    "scalar",
    "Span",
    "rank",
    "in_closure",
    "Imaginary",
    "RankCertificate",
    "extract_basis",
    "rank_by_enumeration",
]

# vector coordinate holding the constant term; generators use their own index
_CONSTANT_KEY = -1


class TooLargeError(ValueError):
    """Input too large for exhaustive enumeration."""


class InvariantNotDefinableError(ValueError):
    """A class invariant does not lie in the affine span of the tuple."""


@dataclass(frozen=True)
class AffineForm:
    """constant + sum of coeff * generator, with exact rational coefficients.

    ``coeffs`` is stored sorted by generator index with zero terms dropped, so
    structural equality coincides with equality of forms.
    """

    constant: Fraction = Fraction(0)
    coeffs: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        cleaned = []
        seen = set()
        items = self.coeffs.items() if isinstance(self.coeffs, dict) else self.coeffs
        for i, c in items:
            c = Fraction(c)
            if i < 0 or int(i) != i:
                raise ValueError(f"bad generator index {i!r}")
            if i in seen:
                raise ValueError(f"repeated generator index {i}")
            seen.add(i)
            if c:
                cleaned.append((int(i), c))
        object.__setattr__(self, "coeffs", tuple(sorted(cleaned)))

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        for j, c in self.coeffs:
            if j == i:
                return c
        return Fraction(0)

    def __add__(self, other):
        other = _as_form(other)
        keys = {i for i, _ in self.coeffs} | {i for i, _ in other.coeffs}
        return AffineForm(
            self.constant + other.constant,
            tuple((i, self.coeff(i) + other.coeff(i)) for i in sorted(keys)),
        )

    __radd__ = __add__

    def __neg__(self):
        return AffineForm(-self.constant, tuple((i, -c) for i, c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_form(other))

    def __rsub__(self, other):
        return _as_form(other) + (-self)

    def __mul__(self, k):
        k = Fraction(k)
        return AffineForm(self.constant * k, tuple((i, c * k) for i, c in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = [f"{c}*g{i}" for i, c in self.coeffs]
        if self.constant or not parts:
            parts.append(str(self.constant))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AffineForm({self})"


def _as_form(x) -> AffineForm:
    if isinstance(x, AffineForm):
        return x
    return AffineForm(Fraction(x))


def generator(i: int) -> AffineForm:
    return AffineForm(Fraction(0), ((i, Fraction(1)),))


def scalar(q) -> AffineForm:
    return AffineForm(Fraction(q))


def _vector(form: AffineForm) -> dict[int, Fraction]:
    vec = {i: c for i, c in form.coeffs}
    if form.constant:
        vec[_CONSTANT_KEY] = form.constant
    return vec


def _pivot_order(key: int):
    # generators in index order first, the constant coordinate last
    return (key < 0, key)


class Span:
    """Growing reduced-echelon basis for a set of forms.

    With ``with_scalars=True`` (the default) the span is an affine span: the
    constant form 1 is seeded, matching closures that always contain scalars.
    """

    def __init__(self, forms=(), with_scalars: bool = True):
        self._rows: dict[int, dict[int, Fraction]] = {}
        if with_scalars:
            self._rows[_CONSTANT_KEY] = {_CONSTANT_KEY: Fraction(1)}
        for f in forms:
            self.add(f)

    def _reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        vec = dict(vec)
        for pivot, row in self._rows.items():
            c = vec.get(pivot)
            if not c:
                continue
            for k, v in row.items():
                nv = vec.get(k, Fraction(0)) - c * v
                if nv:
                    vec[k] = nv
                elif k in vec:
                    del vec[k]
        return vec

    def add(self, form: AffineForm) -> bool:
        """Insert the form; True when the dimension grew."""
        vec = self._reduce(_vector(form))
        if not vec:
            return False
        pivot = min(vec, key=_pivot_order)
        inv = vec[pivot]
        row = {k: v / inv for k, v in vec.items()}
        for other in self._rows.values():
            c = other.get(pivot)
            if not c:
                continue
            for k, v in row.items():
                nv = other.get(k, Fraction(0)) - c * v
                if nv:
                    other[k] = nv
                elif k in other:
                    del other[k]
        self._rows[pivot] = row
        return True

    def contains(self, form: AffineForm) -> bool:
        return not self._reduce(_vector(form))

    @property
    def dim(self) -> int:
        return len(self._rows)

    def rows(self) -> list[AffineForm]:
        """The reduced rows as forms, in pivot order."""
        out = []
        for pivot in sorted(self._rows, key=_pivot_order):
            row = self._rows[pivot]
            const = row.get(_CONSTANT_KEY, Fraction(0))
            coeffs = tuple((k, v) for k, v in row.items() if k != _CONSTANT_KEY)
            out.append(AffineForm(const, coeffs))
        return out


def rank(forms, context=()) -> int:
    """Added affine-span dimension of the tuple over the context."""
    span = Span(context)
    return sum(1 for f in forms if span.add(f))


def in_closure(form: AffineForm, s, context=()) -> bool:
    """Whether ``form`` lies in the affine span of s, the context, and the scalars."""
    return Span([*s, *context]).contains(form)


@dataclass(frozen=True)
class Imaginary:
    """Class data of a linear equivalence relation: the invariant forms a
    representative must match.  Stored in reduced echelon order, so two
    presentations of the same row space compare equal."""

    invariants: tuple[AffineForm, ...]

    def __post_init__(self):
        forms = tuple(self.invariants)
        if not forms:
            raise ValueError("an imaginary needs at least one invariant form")
        reduced = Span(forms, with_scalars=False).rows()
        if not reduced:
            raise ValueError("invariant forms are all zero")
        object.__setattr__(self, "invariants", tuple(reduced))

    def __str__(self) -> str:
        return "{" + ", ".join(str(f) for f in self.invariants) + "}"


@dataclass(frozen=True)
class RankCertificate:
    """Outcome of basis extraction: chosen positions, the remainder, and the
    two ranks whose equality witnesses independence from the class data."""

    a_indices: tuple[int, ...]
    c_indices: tuple[int, ...]
    rank_over_empty: int
    rank_over_class: int


def extract_basis(x, e: Imaginary) -> RankCertificate:
    """Greedy left-to-right basis of the tuple ``x`` over the class data ``e``.

    Positions whose form grows the span over the class context are selected;
    the postconditions (class determined by the tuple, remainder recoverable
    from the selection plus the class, and both ranks of the selection equal
    to its size) are re-verified before returning.
    """
    forms = [_as_form(f) for f in x]
    xspan = Span(forms)
    for inv in e.invariants:
        if not xspan.contains(inv):
            raise InvariantNotDefinableError(f"{inv} is not determined by the tuple")
    picker = Span(e.invariants)
    a_idx: list[int] = []
    c_idx: list[int] = []
    for i, f in enumerate(forms):
        (a_idx if picker.add(f) else c_idx).append(i)
    chosen = [forms[i] for i in a_idx]
    cert = RankCertificate(
        tuple(a_idx), tuple(c_idx), rank(chosen), rank(chosen, e.invariants)
    )
    assert cert.rank_over_empty == cert.rank_over_class == len(a_idx)
    assert all(in_closure(forms[i], chosen, e.invariants) for i in c_idx)
    return cert


def rank_by_enumeration(forms, context=()) -> int:
    """Largest independent subset, by exhaustive search; tuples of length > 8 are refused.

    A subset is independent when no member lies in the closure of the others
    over the context.
    """
    forms = [_as_form(f) for f in forms]
    if len(forms) > 8:
        raise TooLargeError(f"enumeration capped at 8 forms, got {len(forms)}")
    context = list(context)
    for size in range(len(forms), -1, -1):
        for subset in combinations(range(len(forms)), size):
            if all(
                not in_closure(
                    forms[i], [forms[j] for j in subset if j != i], context
                )
                for i in subset
            ):
                return size
    return 0
