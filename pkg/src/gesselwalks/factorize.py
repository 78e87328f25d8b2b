"""Unique factorization ``h = h_minus * h_zero * h_plus`` of a series."""
from __future__ import annotations

from typing import NamedTuple

from .laurent import Grading
from .series import TSeries


class Factorization(NamedTuple):
    minus: TSeries
    zero: TSeries
    plus: TSeries

    def product(self) -> TSeries:
        return self.minus * self.zero * self.plus


def unique_factorization(h: TSeries, grading: Grading) -> Factorization:
    """Factor ``h`` (unit constant term) into negative, zero and positive grade parts.

    The logarithm splits additively by grade, so each factor is the
    exponential of one graded part of ``log h``.
    """
    neg, zero, pos = h.log().split(grading)
    return Factorization(neg.exp(), zero.exp(), pos.exp())
