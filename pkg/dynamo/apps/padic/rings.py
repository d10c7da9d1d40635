# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Fixed-precision arithmetic in unramified extensions of the p-adic integers.

An element of ``Z_q`` (``q = p^k``) is stored as ``k`` integer coefficients
in ``[0, p^N)``, low degree first, of a polynomial in the extension
generator ``w`` reduced modulo the context's monic modulus. Residues live
in ``F_q`` with coefficients in ``[0, p)``.

The uniformizer is always ``p``, so valuations are integers in ``[0, N]``
and ``N`` stands for "zero at working precision".
"""

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from sympy import isprime, multiplicity
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_from_int_poly,
    gf_irreducible_p,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_strip,
)

from dynamo.core.exceptions import ContextMismatch, InvalidContext, NotAUnit


def _to_dense(coeffs):
    """Low-degree-first coefficients to a galoistools dense list."""
    return gf_strip([int(c) for c in reversed(coeffs)])


def _from_dense(dense, k):
    coeffs = [int(c) for c in reversed(dense)]
    return tuple(coeffs + [0] * (k - len(coeffs)))


def is_irreducible_mod_p(modulus, p):
    """Tests ``modulus`` (integers, low degree first) for irreducibility
    over ``F_p``.
    """
    return bool(gf_irreducible_p(gf_from_int_poly(_to_dense(modulus), p), p, ZZ))


@lru_cache(maxsize=None)
def smallest_irreducible(p, k):
    """Returns the lexicographically smallest monic irreducible polynomial
    of degree ``k`` over ``F_p``.

    Candidates are compared by their coefficient vectors, low degree first,
    and returned in the same order with the leading 1 included.
    """
    # for k > 1 a zero constant term makes w a factor
    constants = range(1 if k > 1 else 0, p)
    for constant, *higher in itertools.product(constants, *[range(p)] * (k - 1)):
        candidate = (constant, *higher, 1)
        if is_irreducible_mod_p(candidate, p):
            return candidate

    raise InvalidContext("No irreducible polynomial of degree %d mod %d" % (k, p))


@dataclass(frozen=True)
class PAdicContext:
    """The ring ``Z_q = Z_p[w]/(modulus)`` known modulo ``p^precision``."""

    p: int
    k: int = 1
    precision: int = 16
    modulus: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        errors = []
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            errors.append("p = %s is not prime" % (self.p,))
        if not isinstance(self.k, int) or self.k < 1:
            errors.append("extension degree k = %s must be >= 1" % (self.k,))
        if not isinstance(self.precision, int) or self.precision < 1:
            errors.append("precision N = %s must be >= 1" % (self.precision,))
        if errors:
            raise InvalidContext("; ".join(errors))

        if self.modulus is None:
            modulus = smallest_irreducible(self.p, self.k)
        else:
            modulus = tuple(int(c) for c in self.modulus)
            if len(modulus) != self.k + 1 or modulus[-1] != 1:
                raise InvalidContext(
                    "modulus %s is not monic of degree %d" % (modulus, self.k)
                )
            if not is_irreducible_mod_p(modulus, self.p):
                raise InvalidContext(
                    "modulus %s is reducible mod %d" % (modulus, self.p)
                )
        object.__setattr__(self, "modulus", modulus)

    def __str__(self):
        return "Z_q(p=%d, k=%d, modulus=%s, N=%d)" % (
            self.p,
            self.k,
            ",".join(str(c) for c in self.modulus),
            self.precision,
        )

    @cached_property
    def order(self):
        """The modulus ``p^N`` the coefficients are reduced by."""
        return self.p ** self.precision

    @cached_property
    def q(self):
        return self.p ** self.k

    @cached_property
    def modulus_dense(self):
        return _to_dense(self.modulus)

    @cached_property
    def residue_modulus_dense(self):
        return gf_from_int_poly(self.modulus_dense, self.p)

    @property
    def residue_field(self):
        """Key identifying ``F_q``; contexts differing only in precision
        share it.
        """
        return (self.p, self.k, self.modulus)

    def describe(self):
        """Returns the serialization descriptor ``(p, k, modulus, N)``."""
        return (self.p, self.k, self.modulus, self.precision)

    @classmethod
    def for_degree(cls, p, k, precision=16):
        """The canonical context of degree ``k``: smallest irreducible
        modulus.
        """
        return cls(p, k, precision)

    def with_degree(self, k):
        """Returns the canonical context of degree ``k`` at this precision."""
        if k == self.k:
            return self
        return PAdicContext.for_degree(self.p, k, self.precision)

    def with_precision(self, precision):
        return PAdicContext(self.p, self.k, precision, self.modulus)

    def element(self, value):
        if isinstance(value, PAdicElement):
            if value.context != self:
                raise ContextMismatch("%s does not belong to %s" % (value, self))
            return value
        if isinstance(value, int):
            return PAdicElement(self, (value,))
        return PAdicElement(self, tuple(value))

    def from_generator_poly(self, coeffs):
        """Element ``sum(c_i * w^i)`` for integer ``coeffs`` of any length."""
        dense = gf_rem(_to_dense(coeffs), self.modulus_dense, self.order, ZZ)
        return PAdicElement(self, _from_dense(dense, self.k))

    @property
    def zero(self):
        return PAdicElement(self, ())

    @property
    def one(self):
        return PAdicElement(self, (1,))

    @property
    def generator(self):
        return self.from_generator_poly((0, 1))

    def residue(self, value):
        if isinstance(value, ResidueElement):
            if value.context.residue_field != self.residue_field:
                raise ContextMismatch("%s does not belong to %s" % (value, self))
            return value
        if isinstance(value, int):
            return ResidueElement(self, (value,))
        return ResidueElement(self, tuple(value))

    def residue_from_generator_poly(self, coeffs):
        dense = gf_rem(
            gf_from_int_poly(_to_dense(coeffs), self.p),
            self.residue_modulus_dense,
            self.p,
            ZZ,
        )
        return ResidueElement(self, _from_dense(dense, self.k))

    def residue_elements(self) -> Iterator["ResidueElement"]:
        """Yields every element of ``F_q`` in canonical order (coefficient
        vectors compared as integer tuples).
        """
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield ResidueElement(self, coeffs)

    def lift(self, residue):
        return PAdicElement(self, self.residue(residue).coeffs)


@dataclass(frozen=True)
class PAdicElement:
    context: PAdicContext
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        k = self.context.k
        if len(self.coeffs) > k:
            raise ValueError(
                "%d coefficients given for a degree %d extension"
                % (len(self.coeffs), k)
            )
        order = self.context.order
        coeffs = [int(c) % order for c in self.coeffs]
        object.__setattr__(self, "coeffs", tuple(coeffs + [0] * (k - len(coeffs))))

    def __str__(self):
        if self.context.k == 1:
            return str(self.coeffs[0])
        return "[%s]" % ",".join(str(c) for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, int):
            return self.context.element(other)
        if isinstance(other, PAdicElement):
            if other.context != self.context:
                raise ContextMismatch(
                    "Cannot combine elements of %s and %s"
                    % (self.context, other.context)
                )
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PAdicElement(
            self.context, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return PAdicElement(self.context, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.context
        product = gf_mul(_to_dense(self.coeffs), _to_dense(other.coeffs), ctx.order, ZZ)
        reduced = gf_rem(product, ctx.modulus_dense, ctx.order, ZZ)
        return PAdicElement(ctx, _from_dense(reduced, ctx.k))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.invert() ** (-exponent)
        ctx = self.context
        power = gf_pow_mod(
            _to_dense(self.coeffs), exponent, ctx.modulus_dense, ctx.order, ZZ
        )
        return PAdicElement(ctx, _from_dense(power, ctx.k))

    def is_zero(self):
        """Zero at working precision."""
        return not any(self.coeffs)

    def val(self):
        """The p-adic valuation, ``N`` for the zero representative."""
        precision = self.context.precision
        nonzero = [c for c in self.coeffs if c]
        if not nonzero:
            return precision
        return min(min(multiplicity(self.context.p, c) for c in nonzero), precision)

    def invert(self):
        """Newton iteration ``b <- b(2 - ab)`` seeded by the residue inverse."""
        if self.val() > 0:
            raise NotAUnit("%s is not a unit of %s" % (self, self.context))

        inverse = self.reduce().invert().lift()
        correct = 1
        while correct < self.context.precision:
            inverse = inverse * (2 - self * inverse)
            correct *= 2
        return inverse

    def reduce(self):
        p = self.context.p
        return ResidueElement(self.context, tuple(c % p for c in self.coeffs))

    def divide_by_p(self, exponent):
        """Exact division by ``p^exponent``; the quotient is only known
        modulo ``p^(N - exponent)``.
        """
        if exponent > self.val():
            raise NotAUnit(
                "%s is not divisible by %d^%d" % (self, self.context.p, exponent)
            )
        divisor = self.context.p ** exponent
        return PAdicElement(self.context, tuple(c // divisor for c in self.coeffs))


@dataclass(frozen=True, eq=False)
class ResidueElement:
    """An element of the residue field ``F_q`` of a context.

    Equality only looks at the residue field, not the precision of the
    context the element came from.
    """

    context: PAdicContext
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        k = self.context.k
        if len(self.coeffs) > k:
            raise ValueError(
                "%d coefficients given for F_%d^%d"
                % (len(self.coeffs), self.context.p, k)
            )
        p = self.context.p
        coeffs = [int(c) % p for c in self.coeffs]
        object.__setattr__(self, "coeffs", tuple(coeffs + [0] * (k - len(coeffs))))

    def __eq__(self, other):
        if not isinstance(other, ResidueElement):
            return NotImplemented
        return (
            self.context.residue_field == other.context.residue_field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.context.residue_field, self.coeffs))

    def __str__(self):
        if self.context.k == 1:
            return str(self.coeffs[0])

        terms = []
        for degree in reversed(range(self.context.k)):
            coeff = self.coeffs[degree]
            if not coeff:
                continue
            if degree == 0:
                terms.append(str(coeff))
                continue
            monomial = "w" if degree == 1 else "w^%d" % degree
            terms.append(monomial if coeff == 1 else "%d*%s" % (coeff, monomial))
        return "+".join(terms) or "0"

    @property
    def sort_key(self):
        return self.coeffs

    def _coerce(self, other):
        if isinstance(other, int):
            return self.context.residue(other)
        if isinstance(other, ResidueElement):
            if other.context.residue_field != self.context.residue_field:
                raise ContextMismatch(
                    "Cannot combine residues of %s and %s"
                    % (self.context, other.context)
                )
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ResidueElement(
            self.context, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return ResidueElement(self.context, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.context
        product = gf_mul(_to_dense(self.coeffs), _to_dense(other.coeffs), ctx.p, ZZ)
        reduced = gf_rem(product, ctx.residue_modulus_dense, ctx.p, ZZ)
        return ResidueElement(ctx, _from_dense(reduced, ctx.k))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.invert() ** (-exponent)
        ctx = self.context
        power = gf_pow_mod(
            _to_dense(self.coeffs), exponent, ctx.residue_modulus_dense, ctx.p, ZZ
        )
        return ResidueElement(ctx, _from_dense(power, ctx.k))

    def is_zero(self):
        return not any(self.coeffs)

    def invert(self):
        if self.is_zero():
            raise NotAUnit("0 has no inverse in F_%d" % self.context.q)
        return self ** (self.context.q - 2)

    def frobenius(self):
        return self ** self.context.p

    def pth_root(self):
        """The unique ``s`` with ``s^p = self``; Frobenius has order ``k``."""
        return self ** (self.context.p ** (self.context.k - 1))

    def lift(self):
        """The coefficient-wise lift with coefficients in ``[0, p)``."""
        return PAdicElement(self.context, self.coeffs)

    def teichmuller(self):
        """The unique ``(q-1)``-th root of unity (or 0) reducing to this
        residue; each ``x -> x^q`` step gains one digit.
        """
        x = self.lift()
        for _ in range(self.context.precision):
            x = x ** self.context.q
        return x


def residue_field_elements(context):
    """Every element of ``F_q``, in canonical order."""
    return list(context.residue_elements())


def horner(coeffs: Sequence[int], x):
    """Evaluates the integer polynomial ``coeffs`` (low degree first) at
    ``x``.
    """
    result = x - x
    for coeff in reversed(coeffs):
        result = result * x + coeff
    return result
