# -*- coding: utf-8 -*-

# Copyright threestage developers
# Distributed under the terms of the GNU General Public License

# --------------------------------------------------------------------
# threestage is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# threestage is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with threestage.  If not, see <http://www.gnu.org/licenses/>.
# --------------------------------------------------------------------

"""

Information measures on 2×2 contingency tables

Rows of a table index the hidden bit, columns the observed outcome.
Entropies are measured in bits.

**Provides**

 * :data:`JointCounts`
 * :func:`as_counts`
 * :func:`mutual_information`
 * :func:`mutual_information_stderr`
 * :func:`independence_pvalue`

"""

from typing import Optional

import numpy
from scipy.stats import chi2_contingency

try:
    from threestage.lib.exceptions import EmptyCounts
except ImportError:
    from lib.exceptions import EmptyCounts

JointCounts = numpy.ndarray


def as_counts(counts) -> JointCounts:
    """Returns counts as non-negative 2×2 int64 array

    :param counts: Nested sequence or array of counts

    """

    table = numpy.asarray(counts, dtype=numpy.int64)

    if table.shape != (2, 2):
        raise ValueError(f"Counts have shape {table.shape}, not (2, 2)")
    if (table < 0).any():
        raise ValueError("Counts must be non-negative")

    return table


def _pointwise(counts) -> tuple:
    """Returns joint probabilities and pointwise information in bits"""

    table = as_counts(counts)
    total = table.sum()
    if total == 0:
        raise EmptyCounts("Contingency table has no counts")

    p_xy = table / total
    p_x = p_xy.sum(axis=1, keepdims=True)
    p_y = p_xy.sum(axis=0, keepdims=True)

    # 0 log 0 = 0
    nonzero = p_xy > 0
    info = numpy.zeros_like(p_xy)
    info[nonzero] = numpy.log2(p_xy[nonzero] / (p_x @ p_y)[nonzero])

    return p_xy, info, total


def mutual_information(counts) -> float:
    """Plug-in mutual information estimate of a contingency table

    :param counts: 2×2 table of (hidden bit, outcome) counts
    :return: Mutual information in bits

    """

    p_xy, info, _ = _pointwise(counts)
    mi = float((p_xy * info).sum())

    # Rounding can leave tiny negative values for independent tables
    return max(mi, 0.0)


def mutual_information_stderr(counts) -> float:
    """Delta-method standard error of the plug-in estimate

    :param counts: 2×2 table of (hidden bit, outcome) counts
    :return: Standard error in bits

    """

    p_xy, info, total = _pointwise(counts)
    mi = (p_xy * info).sum()
    variance = ((p_xy * info ** 2).sum() - mi ** 2) / total

    return float(numpy.sqrt(max(variance, 0.0)))


def independence_pvalue(counts) -> Optional[float]:
    """Chi-square p-value for independence of rows and columns

    :param counts: 2×2 table of (hidden bit, outcome) counts
    :return: p-value or None if a row or column is empty

    """

    table = as_counts(counts)
    if (table.sum(axis=0) == 0).any() or (table.sum(axis=1) == 0).any():
        return None

    result = chi2_contingency(table, correction=False)
    return float(result[1])
