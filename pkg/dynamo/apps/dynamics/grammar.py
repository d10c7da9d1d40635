# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Text form of polynomials with integer coefficients in ``w``.

Terms are joined by ``+``/``-``; a term is an optional integer coefficient
followed by ``X<i>^<e>`` factors joined by ``*``. The extension generator
``w`` may appear in coefficient position (``w*X0^2``, ``(1 + w)*X1``).
``^`` and ``**`` both mean exponentiation and whitespace is ignored.

Config files are trusted local input: parsing goes through sympy's
expression parser, which evaluates the text.
"""

from collections import defaultdict

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import BasePolynomialError

from dynamo.core.exceptions import GrammarError

from .polynomials import Polynomial


TRANSFORMATIONS = standard_transformations + (convert_xor,)

GENERATOR = "w"


def variable_names(nvars):
    return ["X%d" % index for index in range(nvars)]


def parse_terms(text, nvars, allow_generator=True):
    """Parses ``text`` into ``[(exponents, w_coeffs)]``.

    ``w_coeffs`` are the integer coefficients, low degree first, of the
    polynomial in ``w`` multiplying the monomial ``exponents``.
    """
    if text is None or not text.strip():
        raise GrammarError("Empty polynomial", text)

    symbols = {name: Symbol(name) for name in variable_names(nvars)}
    generator = Symbol(GENERATOR)
    symbols[GENERATOR] = generator

    try:
        expr = parse_expr(text, local_dict=symbols, transformations=TRANSFORMATIONS)
    except Exception as e:
        raise GrammarError("Cannot parse '%s': %s" % (text, e), text) from e

    free = getattr(expr, "free_symbols", None)
    if free is None:
        raise GrammarError("'%s' is not a polynomial" % text, text)
    unknown = sorted(str(s) for s in free - set(symbols.values()))
    if unknown:
        raise GrammarError(
            "Unknown variables %s in '%s' (expected %s)"
            % (", ".join(unknown), text, ", ".join(variable_names(nvars)) or "none"),
            text,
        )
    if generator in free and not allow_generator:
        raise GrammarError(
            "'%s' uses the extension generator w but the degree is 1" % text, text
        )

    gens = [symbols[name] for name in variable_names(nvars)] + [generator]
    try:
        poly = Poly(expr, *gens)
    except (BasePolynomialError, TypeError, ValueError) as e:
        raise GrammarError("'%s' is not a polynomial: %s" % (text, e), text) from e

    if not all(coeff.is_Integer for coeff in poly.coeffs()):
        raise GrammarError("Coefficients of '%s' must be integers" % text, text)

    grouped = defaultdict(dict)
    for monomial, coeff in poly.terms():
        if coeff:
            grouped[monomial[:nvars]][monomial[nvars]] = int(coeff)

    terms = []
    for exponents, by_power in sorted(grouped.items()):
        w_coeffs = [0] * (max(by_power) + 1)
        for power, coeff in by_power.items():
            w_coeffs[power] = coeff
        terms.append((tuple(exponents), tuple(w_coeffs)))
    return terms


def parse_polynomial(context, text, nvars):
    """A polynomial over the p-adic ring of ``context``."""
    terms = parse_terms(text, nvars, allow_generator=context.k > 1)
    return Polynomial(
        context.zero,
        nvars,
        tuple((e, context.from_generator_poly(w)) for e, w in terms),
    )


def parse_residue_polynomial(context, text, nvars):
    """A polynomial over the residue field of ``context``."""
    terms = parse_terms(text, nvars, allow_generator=context.k > 1)
    return Polynomial(
        context.residue(0),
        nvars,
        tuple((e, context.residue_from_generator_poly(w)) for e, w in terms),
    )


def parse_residue_constant(context, text):
    """A residue field element such as ``w+1`` or ``2``."""
    return parse_residue_polynomial(context, text, 0).evaluate(())


def parse_residue_point(context, text):
    """A comma separated tuple of residue constants, e.g. ``1, w``."""
    return tuple(
        parse_residue_constant(context, part.strip()) for part in text.split(",")
    )
