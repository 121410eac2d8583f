"""Exact arithmetic in prime-power fields, with polynomials and matrices.

Every field is the canonical F_{p^l}: its modulus is the first monic
irreducible of degree l when monic polynomials are enumerated by ascending
coefficient tuple (constant term least significant, digits 0..p-1).  The
canonical primitive element is likewise the first element of full
multiplicative order under the same ordering.  These conventions make every
element encoding and every derived object bit-reproducible across runs.

Elements are encoded as integers in [0, p^l): the base-p digits of the code
are the coordinates with respect to the power basis of the modulus.  `Field`
methods operate directly on integer codes; `FieldElement` wraps a code for
operator-style use.  Fields of small order lazily build full add/mul tables
so that matrix elimination stays fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

FIELD_ORDER_BUDGET = 2**32
_TABLE_MAX_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay below 2^32)."""
    facts: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            facts[p] = facts.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        while n % f == 0:
            facts[f] = facts.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        facts[n] = facts.get(n, 0) + 1
    return facts


def prime_power_split(q: int) -> tuple[int, int]:
    """Write q = p^a with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    facts = factorize(q)
    if len(facts) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, a),) = facts.items()
    return p, a


# ----------------------------------------------------------------------
# Polynomial arithmetic over the prime field on raw digit lists, used only
# to search for the canonical modulus.  Inputs are coefficient lists,
# constant term first; the leading coefficient of a divisor must be a unit.
# ----------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(p: int, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(p: int, a: Sequence[int], f: Sequence[int]) -> list[int]:
    r = list(a)
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(r) - 1 >= df and r:
        c = (r[-1] * lead_inv) % p
        shift = len(r) - 1 - df
        for i, fc in enumerate(f):
            r[shift + i] = (r[shift + i] - c * fc) % p
        _ptrim(r)
    return r


def _ppowmod(p: int, a: Sequence[int], e: int, f: Sequence[int]) -> list[int]:
    result = [1]
    base = _pmod(p, a, f)
    while e:
        if e & 1:
            result = _pmod(p, _pmul(p, result, base), f)
        base = _pmod(p, _pmul(p, base, base), f)
        e >>= 1
    return result


def _pgcd(p: int, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(p, a, b)
    if a:
        lead_inv = pow(a[-1], p - 2, p)
        a = [(c * lead_inv) % p for c in a]
    return a


def _is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Rabin's irreducibility test for a monic f of degree >= 1 over F_p."""
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]
    # x^(p^k) mod f for k = 0..d, iterating the Frobenius power
    frob = [list(x)]
    for _ in range(d):
        frob.append(_ppowmod(p, frob[-1], p, f))
    if _psub(p, frob[d], x):
        return False
    for t in factorize(d):
        g = _pgcd(p, _psub(p, frob[d // t], x), f)
        if g != [1]:
            return False
    return True


def _psub(p: int, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _ptrim(out)


def _canonical_modulus(p: int, degree: int) -> tuple[int, ...]:
    """First irreducible monic of the given degree in coefficient-tuple order."""
    if degree == 1:
        return (0, 1)  # prime-field convention: modulus x
    for enc in range(p**degree):
        coeffs, e = [], enc
        for _ in range(degree):
            e, c = divmod(e, p)
            coeffs.append(c)
        coeffs.append(1)
        if _is_irreducible(p, coeffs):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ----------------------------------------------------------------------
# Fields
# ----------------------------------------------------------------------

class Field:
    """The canonical field F_{p^degree} acting on integer element codes."""

    def __init__(self, p: int, degree: int, modulus: tuple[int, ...]):
        self.p = p
        self.degree = degree
        self.modulus = modulus
        self.order = p**degree
        # rows for x^(degree+j) reduced mod modulus, j = 0..degree-2
        self._red: list[tuple[int, ...]] = []
        if degree > 1:
            row = [(-c) % p for c in modulus[:degree]]
            self._red.append(tuple(row))
            for _ in range(degree - 2):
                over = row[-1]
                row = [0] + row[:-1]
                if over:
                    row = [(c + over * r) % p for c, r in zip(row, self._red[0])]
                self._red.append(tuple(row))
        self._mul_table: list[int] | None = None
        self._add_table: list[int] | None = None
        self._neg_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        self._conj_table: list[int] | None = None
        self._primitive: int | None = None
        self._unit_order_facts: dict[int, int] | None = None

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree})"

    # -- encoding -------------------------------------------------------

    def decode(self, code: int) -> tuple[int, ...]:
        """Base-p digits of a code: coordinates in the power basis."""
        digits = []
        for _ in range(self.degree):
            code, c = divmod(code, self.p)
            digits.append(c)
        return tuple(digits)

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.degree:
            raise ValueError("too many coordinates")
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c % self.p
        return code

    def element(self, value: int | Sequence[int]) -> FieldElement:
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"code {value} outside [0, {self.order})")
            return FieldElement(self, value)
        return FieldElement(self, self.encode(value))

    def codes(self) -> range:
        return range(self.order)

    def elements(self) -> Iterator[FieldElement]:
        for code in range(self.order):
            yield FieldElement(self, code)

    # -- arithmetic on codes ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a * self.order + b]
        p = self.p
        if self.degree == 1:
            return (a + b) % p
        out, mult = 0, 1
        for _ in range(self.degree):
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            out += ((ca + cb) % p) * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self._neg_table is not None:
            return self._neg_table[a]
        p = self.p
        if self.degree == 1:
            return (-a) % p
        out, mult = 0, 1
        for _ in range(self.degree):
            a, c = divmod(a, p)
            out += ((-c) % p) * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.order + b]
        p = self.p
        if self.degree == 1:
            return (a * b) % p
        if a == 0 or b == 0:
            return 0
        da, db = self.decode(a), self.decode(b)
        l = self.degree
        conv = [0] * (2 * l - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        for j in range(2 * l - 2, l - 1, -1):
            over = conv[j] % p
            if over:
                red = self._red[j - l]
                for i in range(l):
                    conv[i] += over * red[i]
        return self.encode([c % p for c in conv[:l]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- conjugation (Hermitian levels) -----------------------------------

    @property
    def is_quadratic_level(self) -> bool:
        """True when F has a subfield index 2, i.e. order is q^2 for q = p^(degree/2)."""
        return self.degree % 2 == 0

    @property
    def q_level(self) -> int:
        if not self.is_quadratic_level:
            raise ValueError(f"{self!r} is not a quadratic extension: no conjugation")
        return self.p ** (self.degree // 2)

    def conj(self, a: int) -> int:
        """x -> x^q for the field of order q^2; errors on odd-degree fields."""
        q = self.q_level
        if self._conj_table is not None:
            return self._conj_table[a]
        return self.pow(a, q)

    # -- multiplicative structure -----------------------------------------

    def _order_facts(self) -> dict[int, int]:
        if self._unit_order_facts is None:
            self._unit_order_facts = factorize(self.order - 1)
        return self._unit_order_facts

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.order - 1
        for prime in self._order_facts():
            while order % prime == 0 and self.pow(a, order // prime) == 1:
                order //= prime
        return order

    def primitive_code(self) -> int:
        """Canonically smallest code of full multiplicative order."""
        if self._primitive is None:
            full = self.order - 1
            for code in range(1, self.order):
                if self.element_order(code) == full:
                    self._primitive = code
                    break
        return self._primitive

    # -- lookup-table acceleration ----------------------------------------

    def _ensure_tables(self) -> None:
        if self._mul_table is not None or self.order > _TABLE_MAX_ORDER:
            return
        n = self.order
        decoded = [self.decode(c) for c in range(n)]
        p, l = self.p, self.degree
        add = [0] * (n * n)
        for a in range(n):
            da = decoded[a]
            base = a * n
            for b in range(a, n):
                s = self.encode([(x + y) % p for x, y in zip(da, decoded[b])])
                add[base + b] = s
                add[b * n + a] = s
        mul = [0] * (n * n)
        for a in range(1, n):
            base = a * n
            for b in range(a, n):
                m = self.mul(a, b)
                mul[base + b] = m
                mul[b * n + a] = m
        self._add_table = add
        self._neg_table = [self.neg(a) for a in range(n)]
        self._mul_table = mul
        self._inv_table = [0] + [self.pow(a, n - 2) for a in range(1, n)]
        if self.degree % 2 == 0:
            q = self.q_level
            self._conj_table = [self.pow(a, q) for a in range(n)]


@lru_cache(maxsize=None)
def make_field(p: int, degree: int = 1) -> Field:
    """The canonical F_{p^degree}; deterministic across runs."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if degree < 1:
        raise ValueError(f"extension degree must be >= 1, got {degree}")
    if p**degree > FIELD_ORDER_BUDGET:
        raise ValueError(f"field order {p}^{degree} exceeds the {FIELD_ORDER_BUDGET} budget")
    return Field(p, degree, _canonical_modulus(p, degree))


@dataclass(frozen=True)
class FieldElement:
    """A field element: a code with operator sugar on top of `Field`."""

    field: Field
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.decode(self.code)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.code
        return other % self.field.p  # small-integer constants embed as constants

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.code, self._coerce(other)))

    def __rsub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.code))

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field, self.field.div(self.code, self._coerce(other)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __bool__(self) -> bool:
        return self.code != 0

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def conj(self) -> FieldElement:
        return FieldElement(self.field, self.field.conj(self.code))

    def order(self) -> int:
        return self.field.element_order(self.code)


def primitive_element(field: Field) -> FieldElement:
    """Canonically smallest element of full multiplicative order."""
    return FieldElement(field, field.primitive_code())


def conj(x: FieldElement) -> FieldElement:
    return x.conj()


# ----------------------------------------------------------------------
# Subfield embeddings
# ----------------------------------------------------------------------

class Embedding:
    """Injective ring homomorphism F_{p^a} -> F_{p^b} (a | b).

    Maps sum(c_i x^i) to sum(c_i rho^i) for the canonically smallest root
    rho of the source modulus inside the target.  `descend` inverts the map
    on its image and raises for elements outside the embedded subfield.
    """

    def __init__(self, src: Field, dst: Field, root: int):
        self.src = src
        self.dst = dst
        self.root = root
        pows = [1]
        for _ in range(src.degree - 1):
            pows.append(dst.mul(pows[-1], root))
        self._pows = pows
        self._solver = self._build_solver()

    def __call__(self, code: int) -> int:
        dst = self.dst
        out = 0
        for c, rho_i in zip(self.src.decode(code), self._pows):
            if c:
                out = dst.add(out, dst.mul(c, rho_i))
        return out

    def apply(self, x: FieldElement) -> FieldElement:
        if x.field is not self.src:
            raise ValueError("element not in the embedding's source field")
        return FieldElement(self.dst, self(x.code))

    def _build_solver(self) -> tuple[list[list[int]], list[int]]:
        # Row-reduce [E | I_b] over F_p, where E's columns are the digit
        # vectors of rho^i.  E has full column rank, so the pivot columns
        # are exactly 0..a-1 in order.
        p = self.src.p
        a, b = self.src.degree, self.dst.degree
        cols = [self.dst.decode(x) for x in self._pows]
        aug = [[cols[j][i] for j in range(a)] + [int(i == k) for k in range(b)]
               for i in range(b)]
        row = 0
        for col in range(a):
            piv = next(i for i in range(row, b) if aug[i][col])
            aug[row], aug[piv] = aug[piv], aug[row]
            f = pow(aug[row][col], p - 2, p)
            aug[row] = [(f * v) % p for v in aug[row]]
            for i in range(b):
                if i != row and aug[i][col]:
                    g = aug[i][col]
                    aug[i] = [(v - g * w) % p for v, w in zip(aug[i], aug[row])]
            row += 1
        transform = [r[a:] for r in aug]
        return transform, list(range(a))

    def descend(self, code: int) -> int:
        """Preimage of a target code, or ValueError when not in the image."""
        p = self.src.p
        a, b = self.src.degree, self.dst.degree
        y = self.dst.decode(code)
        transform, _ = self._solver
        z = [sum(t * yv for t, yv in zip(trow, y)) % p for trow in transform]
        if any(z[a:]):
            raise ValueError(f"element {code} of {self.dst!r} is not in the {self.src!r} subfield")
        return self.src.encode(z[:a])


@lru_cache(maxsize=None)
def extend(base: Field, degree: int) -> tuple[Field, Embedding]:
    """The canonical F_{p^(l*degree)} together with the embedding of base."""
    if degree < 1:
        raise ValueError(f"extension degree must be >= 1, got {degree}")
    top = make_field(base.p, base.degree * degree)
    if base.degree == 1:
        return top, Embedding(base, top, 0)
    # Roots of the base modulus live in the unique subfield copy of the
    # base's order, generated by gamma^((|top|-1)/(|base|-1)).
    gamma = top.primitive_code()
    step = (top.order - 1) // (base.order - 1)
    zeta = top.pow(gamma, step)
    roots = []
    candidate = 1
    for _ in range(base.order - 1):
        if _eval_in(top, base.modulus, candidate) == 0:
            roots.append(candidate)
        candidate = top.mul(candidate, zeta)
    if _eval_in(top, base.modulus, 0) == 0:
        roots.append(0)
    if len(roots) != base.degree:
        raise AssertionError("modulus root count mismatch in subfield")  # unreachable
    return top, Embedding(base, top, min(roots))


def _eval_in(field: Field, prime_coeffs: Sequence[int], x: int) -> int:
    """Evaluate a polynomial with prime-subfield coefficients at a code."""
    acc = 0
    for c in reversed(list(prime_coeffs)):
        acc = field.add(field.mul(acc, x), c % field.p)
    return acc


# ----------------------------------------------------------------------
# Polynomials over a field
# ----------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial; coefficient codes, constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> Poly:
        return cls(field, (1,))

    @classmethod
    def x_pow(cls, field: Field, n: int) -> Poly:
        return cls(field, (0,) * n + (1,))

    @classmethod
    def binomial(cls, field: Field, n: int, constant: int) -> Poly:
        """x^n + constant (pass a negated code for x^n - c)."""
        return cls(field, (constant,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Poly) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else (f"x^{i}" if c == 1 else f"{c}*x^{i}"))
        return "Poly(" + " + ".join(terms) + ")"

    def __add__(self, other: Poly) -> Poly:
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __sub__(self, other: Poly) -> Poly:
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else 0
            y = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(f.sub(x, y))
        return Poly(f, out)

    def __mul__(self, other: Poly) -> Poly:
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        mul, add = f.mul, f.add
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(f, out)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dd = other.degree
        lead_inv = f.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and rem:
            c = f.mul(rem[-1], lead_inv)
            shift = len(rem) - 1 - dd
            quot[shift] = c
            for i, oc in enumerate(other.coeffs):
                if oc:
                    rem[shift + i] = f.sub(rem[shift + i], f.mul(c, oc))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def eval_at(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def map_coeffs(self, fn, target: Field) -> Poly:
        return Poly(target, [fn(c) for c in self.coeffs])


# ----------------------------------------------------------------------
# Matrices over a field
# ----------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of element codes with exact elimination."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries: Sequence[Sequence[int]], cols: int | None = None):
        rows = [tuple(r) for r in entries]
        if rows:
            if cols is not None and cols != len(rows[0]):
                raise ValueError("column count does not match the rows")
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.entries = tuple(rows)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls(field, [(0,) * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, [tuple(int(i == j) for j in range(n)) for i in range(n)], cols=n)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and other.field is self.field
                and other.cols == self.cols and other.entries == self.entries)

    def __hash__(self) -> int:
        return hash((id(self.field), self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"

    def is_zero(self) -> bool:
        return all(all(v == 0 for v in row) for row in self.entries)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def transpose(self) -> Matrix:
        return Matrix(self.field, list(zip(*self.entries)), cols=self.rows)

    def conj_transpose(self) -> Matrix:
        """Entrywise x -> x^q conjugation combined with transposition."""
        f = self.field
        f._ensure_tables()
        cj = f.conj
        return Matrix(f, [[cj(self.entries[i][j]) for i in range(self.rows)]
                          for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if other.field is not self.field:
            raise ValueError("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        f = self.field
        f._ensure_tables()
        mul, add = f.mul, f.add
        bcols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for arow in self.entries:
            orow = []
            for bcol in bcols:
                acc = 0
                for x, y in zip(arow, bcol):
                    if x and y:
                        acc = add(acc, mul(x, y))
                orow.append(acc)
            out.append(orow)
        return Matrix(f, out, cols=other.cols)

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        f = self.field
        f._ensure_tables()
        mul, sub, inv = f.mul, f.sub, f.inv
        rows = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            piv = next((i for i in range(r, self.rows) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            lead = rows[r][c]
            if lead != 1:
                fct = inv(lead)
                rows[r][c:] = [mul(fct, v) for v in rows[r][c:]]
            prow = rows[r]
            for i in range(self.rows):
                g = rows[i][c]
                if g and i != r:
                    rows[i][c:] = [sub(v, mul(g, w)) for v, w in zip(rows[i][c:], prow[c:])]
            pivots.append(c)
            r += 1
        return Matrix(f, rows, cols=self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_nullspace(self) -> Matrix:
        """Rows form a basis of {v : self . v^T = 0}."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        f = self.field
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for ri, pc in enumerate(pivots):
                v[pc] = f.neg(red.entries[ri][fc])
            basis.append(v)
        return Matrix(f, basis, cols=self.cols)
