"""Exact arithmetic in finite fields GF(p^e).

Prime fields are the primary target; extension fields are supported through
an explicit monic irreducible modulus (or a deterministic search for the
smallest one).  Elements are canonical and immutable: equal coefficient
vectors mean equal elements, and operations on elements of different fields
raise instead of coercing.

For small orders every element is interned and full addition/multiplication
tables are precomputed, so arithmetic is a single table lookup with no
allocation.  This is what keeps the exhaustive cross-validation sweeps fast.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatchError

# Above this order we fall back to computing each operation on demand.
_TABLE_MAX_ORDER = 256

_MAX_CHARACTERISTIC = 1 << 31


def is_prime(n: int) -> bool:
    """Trial-division primality test (sufficient for p <= 2^31)."""
    if n < 2:
        return False
    for small in (2, 3):
        if n % small == 0:
            return n == small
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


# --- GF(p)[X] helpers on little-endian int coefficient lists -------------
#
# These exist only to validate / search for the extension modulus; all
# user-facing polynomial arithmetic lives in unipoly.py on field elements.


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, mod, p)


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _poly_pow_x_mod(exp: int, mod: list[int], p: int) -> list[int]:
    """X^exp reduced modulo ``mod`` over GF(p)."""
    result = [1]
    base = _poly_rem([0, 1], mod, p)
    while exp:
        if exp & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        exp >>= 1
    return result


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Irreducibility over GF(p) of a monic polynomial, degree >= 1.

    Degrees 2 and 3 reduce to a root check; higher degrees use the
    factorization-free test gcd(f, X^(p^i) - X) = const for i <= deg/2.
    """
    e = len(mod) - 1
    if e == 1:
        return True
    if e <= 3:
        return all(_poly_eval_int(mod, x, p) != 0 for x in range(p))
    for i in range(1, e // 2 + 1):
        xq = _poly_pow_x_mod(p**i, mod, p)
        diff = list(xq)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(mod, _trim(diff), p)) - 1 > 0:
            return False
    return True


def _poly_eval_int(c: list[int], x: int, p: int) -> int:
    acc = 0
    for ci in reversed(c):
        acc = (acc * x + ci) % p
    return acc


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e, by integer encoding of the
    lower coefficients."""
    for code in range(p**e):
        low = []
        c = code
        for _ in range(e):
            low.append(c % p)
            c //= p
        mod = low + [1]
        if _is_irreducible(mod, p):
            return tuple(mod)
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class FieldElement:
    """An element of a :class:`Field`, stored by its canonical integer code.

    The code is the little-endian base-p packing of the coefficient vector;
    for prime fields it is simply the residue.
    """

    __slots__ = ("field", "val")

    def __init__(self, field: "Field", val: int):
        self.field = field
        self.val = val

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self.field
        g = other.field
        if g is not f and g != f:
            raise FieldMismatchError(f"cannot combine elements of {f} and {g}")
        t = f._add_t
        if t is not None:
            return t[self.val * f.order + other.val]
        return FieldElement(f, f._add_val(self.val, other.val))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self.field
        g = other.field
        if g is not f and g != f:
            raise FieldMismatchError(f"cannot combine elements of {f} and {g}")
        if f._add_t is not None:
            return f._add_t[self.val * f.order + f._neg_t[other.val].val]
        return FieldElement(f, f._add_val(self.val, f._neg_val(other.val)))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        f = self.field
        g = other.field
        if g is not f and g != f:
            raise FieldMismatchError(f"cannot combine elements of {f} and {g}")
        t = f._mul_t
        if t is not None:
            return t[self.val * f.order + other.val]
        return FieldElement(f, f._mul_val(self.val, other.val))

    def __neg__(self):
        f = self.field
        if f._neg_t is not None:
            return f._neg_t[self.val]
        return FieldElement(f, f._neg_val(self.val))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        if self.val == 0:
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        if f._inv_t is not None:
            return f._inv_t[self.val]
        return FieldElement(f, f._inv_val(self.val))

    def __pow__(self, exponent: int) -> "FieldElement":
        f = self.field
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = f.one
        base = self
        while exponent:
            if exponent & 1:
                acc = acc * base
            base = base * base
            exponent >>= 1
        return acc

    # -- identity and display ----------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.val == other.val and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self):
        return hash((self.val, self.field.order))

    def __bool__(self):
        return self.val != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector, little-endian in the modulus root."""
        return self.field._coeff_vector(self.val)

    def to_int(self) -> int:
        return self.val

    def to_json(self):
        """Integer for prime fields, coefficient array otherwise."""
        if self.field.extension_degree == 1:
            return self.val
        return list(self.coeffs)

    def __str__(self):
        f = self.field
        if f.extension_degree == 1:
            return str(self.val)
        parts = []
        for i in reversed(range(f.extension_degree)):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                parts.append(var if c == 1 else f"{c}{var}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"GF({self.field.order})({self})"


class Field:
    """The finite field GF(p^e).

    ``modulus`` is the monic irreducible reduction polynomial as a
    little-endian coefficient tuple over GF(p); it must be omitted for prime
    fields and may be omitted for extension fields (then the smallest monic
    irreducible of degree e is used).
    """

    __slots__ = (
        "p",
        "extension_degree",
        "order",
        "modulus",
        "_elems",
        "_add_t",
        "_mul_t",
        "_neg_t",
        "_inv_t",
        "_val_ops",
    )

    def __init__(
        self,
        p: int,
        e: int = 1,
        modulus: Sequence[int] | None = None,
    ):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")
        if p > _MAX_CHARACTERISTIC:
            raise ValueError(f"characteristic {p} above supported range 2^31")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"extension degree must be a positive integer, got {e!r}")
        self.p = p
        self.extension_degree = e
        self.order = p**e
        if e == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                self.modulus = _find_modulus(p, e)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != e + 1:
                    raise ValueError(
                        f"modulus must have degree {e}, got degree {len(mod) - 1}"
                    )
                if mod[-1] != 1:
                    raise ValueError("modulus must be monic")
                if not _is_irreducible(list(mod), p):
                    raise ValueError(f"modulus {mod} is reducible over GF({p})")
                self.modulus = mod

        self._elems = None
        self._add_t = None
        self._mul_t = None
        self._neg_t = None
        self._inv_t = None
        self._val_ops = None
        if self.order <= _TABLE_MAX_ORDER:
            self._build_tables()

    # -- raw arithmetic on integer codes -----------------------------------

    def _coeff_vector(self, val: int) -> tuple[int, ...]:
        if self.extension_degree == 1:
            return (val,)
        out = []
        for _ in range(self.extension_degree):
            out.append(val % self.p)
            val //= self.p
        return tuple(out)

    def _pack(self, coeffs: Iterable[int]) -> int:
        val = 0
        for c in reversed(list(coeffs)):
            val = val * self.p + (c % self.p)
        return val

    def _add_val(self, a: int, b: int) -> int:
        if self.extension_degree == 1:
            return (a + b) % self.p
        ca, cb = self._coeff_vector(a), self._coeff_vector(b)
        return self._pack((x + y) % self.p for x, y in zip(ca, cb))

    def _neg_val(self, a: int) -> int:
        if self.extension_degree == 1:
            return (-a) % self.p
        return self._pack((-c) % self.p for c in self._coeff_vector(a))

    def _mul_val(self, a: int, b: int) -> int:
        if self.extension_degree == 1:
            return (a * b) % self.p
        ca = list(self._coeff_vector(a))
        cb = list(self._coeff_vector(b))
        prod = _poly_mul_mod(ca, cb, list(self.modulus), self.p)
        prod += [0] * (self.extension_degree - len(prod))
        return self._pack(prod)

    def _inv_val(self, a: int) -> int:
        if self.extension_degree == 1:
            return pow(a, self.p - 2, self.p)
        # a^(q-2) by square-and-multiply over _mul_val
        result, base, exp = 1, a, self.order - 2
        while exp:
            if exp & 1:
                result = self._mul_val(result, base)
            base = self._mul_val(base, base)
            exp >>= 1
        return result

    def _build_tables(self):
        q = self.order
        elems = [FieldElement(self, v) for v in range(q)]
        self._elems = elems
        self._neg_t = [elems[self._neg_val(v)] for v in range(q)]
        add_t = [None] * (q * q)
        mul_t = [None] * (q * q)
        for a in range(q):
            base = a * q
            for b in range(a, q):
                s = elems[self._add_val(a, b)]
                m = elems[self._mul_val(a, b)]
                add_t[base + b] = add_t[b * q + a] = s
                mul_t[base + b] = mul_t[b * q + a] = m
        self._add_t = add_t
        self._mul_t = mul_t
        self._inv_t = [None] + [elems[self._inv_val(v)] for v in range(1, q)]

    def val_ops(self):
        """(mul, sub, inv) callables on integer element codes.

        The exact-elimination kernels run on raw codes to dodge per-element
        dispatch; these closures are the only arithmetic they use, so prime
        and extension fields share one code path.
        """
        if self._val_ops is not None:
            return self._val_ops
        self._val_ops = self._make_val_ops()
        return self._val_ops

    def _make_val_ops(self):
        if self.extension_degree == 1:
            p = self.p

            def mul(a, b):
                return a * b % p

            def sub(a, b):
                return (a - b) % p

            def inv(a):
                return pow(a, p - 2, p)

            return mul, sub, inv
        if self._mul_t is not None:
            q = self.order
            mul_t = [x.val for x in self._mul_t]
            add_t = [x.val for x in self._add_t]
            neg_t = [x.val for x in self._neg_t]
            inv_t = [0] + [x.val for x in self._inv_t[1:]]

            def mul(a, b):
                return mul_t[a * q + b]

            def sub(a, b):
                return add_t[a * q + neg_t[b]]

            def inv(a):
                return inv_t[a]

            return mul, sub, inv

        def sub_slow(a, b):
            return self._add_val(a, self._neg_val(b))

        return self._mul_val, sub_slow, self._inv_val

    # -- element construction ----------------------------------------------

    def element(self, value) -> FieldElement:
        """Build an element from an integer code or a coefficient sequence.

        Integers are reduced mod p for prime fields; for extension fields an
        integer must be a canonical code in [0, q).
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not an element of {self}")
            return value
        if isinstance(value, int):
            if self.extension_degree == 1:
                value %= self.p
            elif not 0 <= value < self.order:
                raise ValueError(
                    f"integer code {value} out of range for {self}; "
                    "pass coefficients instead"
                )
            return self._get(value)
        if isinstance(value, (list, tuple)):
            if len(value) > self.extension_degree:
                raise ValueError(
                    f"coefficient vector longer than extension degree {self.extension_degree}"
                )
            return self._get(self._pack(list(value) + [0] * (self.extension_degree - len(value))))
        raise TypeError(f"cannot build a field element from {value!r}")

    def _get(self, val: int) -> FieldElement:
        if self._elems is not None:
            return self._elems[val]
        return FieldElement(self, val)

    from_int = _get

    @property
    def zero(self) -> FieldElement:
        return self._get(0)

    @property
    def one(self) -> FieldElement:
        return self._get(1)

    def elements(self) -> list[FieldElement]:
        """All q elements exactly once, ordered by canonical integer code
        (lexicographic coefficient order starting at 0)."""
        if self._elems is not None:
            return list(self._elems)
        return [FieldElement(self, v) for v in range(self.order)]

    def __iter__(self):
        return iter(self.elements())

    def __len__(self):
        return self.order

    # -- identity and display ----------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return (
            self.p == other.p
            and self.extension_degree == other.extension_degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.extension_degree, self.modulus))

    def __repr__(self):
        if self.extension_degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.extension_degree})"


def GF(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Convenience constructor mirroring the usual notation."""
    return Field(p, e, modulus)
