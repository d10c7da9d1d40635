# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.


class DynamoError(Exception):
    pass


class InvalidContext(DynamoError, ValueError):
    pass


class ContextMismatch(DynamoError, ValueError):
    pass


class NotAUnit(DynamoError, ArithmeticError):
    pass


class ZeroPolynomial(DynamoError, ValueError):
    pass


class GrammarError(DynamoError, ValueError):
    def __init__(self, message, text=None):
        super().__init__(message)
        self.text = text


class NotALift(DynamoError):
    """Raised when a map does not reduce to a p-th power.

    ``component`` is the index of the first offending component and
    ``monomial`` the exponent vector of its first offending monomial.
    """

    def __init__(self, message, component=None, monomial=None):
        super().__init__(message)
        self.component = component
        self.monomial = monomial


class NotRestricted(DynamoError):
    pass


class BudgetExceeded(DynamoError):
    def __init__(self, required, budget):
        super().__init__(
            "Enumeration needs %d points but the budget is %d" % (required, budget)
        )
        self.required = required
        self.budget = budget


class ConvergenceError(DynamoError):
    pass


class IncompatibleCycle(DynamoError, ValueError):
    pass


class ResidueDiscMismatch(DynamoError, ValueError):
    pass


class InvarianceError(DynamoError):
    pass


class IncompletePreimages(DynamoError):
    pass


class NoBackwardOrbit(DynamoError):
    pass


class ConfigError(DynamoError):
    """Aggregated experiment configuration problems.

    ``errors`` lists every violation found; ``lineno`` is set for syntax
    errors, which stop parsing at the offending line.
    """

    def __init__(self, errors, lineno=None):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        self.lineno = lineno
        message = "; ".join(self.errors)
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)
