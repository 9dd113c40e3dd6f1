# -*- coding: utf-8 -*-
"""Exceptions and warnings raised by the majoranastates package.

Bad arguments raise the built-in ``ValueError``; the classes here cover
the cases callers want to tell apart.
"""

class NumericalError(ArithmeticError):
    """A computation has no meaningful result for its input.

    Raised, for example, when normalising a zero vector, when projecting a
    state with no symmetric component, or when two marginals cannot come
    from any single pure state.
    """

class DocumentError(ValueError):
    """A JSON document does not describe a valid object."""

class IllConditionedWarning(RuntimeWarning):
    """A local operation is close to singular; results may be inaccurate."""
