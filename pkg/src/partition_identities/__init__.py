"""Partitions counted by the multiplicity of their smallest part.

Counts ``p(n)``, ``a(n)`` (smallest part repeated), ``c(n)``, ``d(n)``,
``p(n, t)`` and ``a_m(n)``, and checks ``a(n) = 2p(n) - p(n+1) = p(2n, n)`` by
enumeration, explicit bijections and truncated q-series.
"""
from .fps import LaurentSeries, coeff, pochhammer_fin, pochhammer_inf
from .partitions import Partition, enumerate_partitions, p

__all__ = [
    "LaurentSeries",
    "Partition",
    "coeff",
    "enumerate_partitions",
    "p",
    "pochhammer_fin",
    "pochhammer_inf",
]
