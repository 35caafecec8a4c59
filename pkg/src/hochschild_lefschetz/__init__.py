# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Exact Hochschild homology of Weyl algebras and checks of Lefschetz number formulas.

Chains, twists and class extraction are computed over the rationals. Floating point is
only used for simplex quadrature and the heat kernel checks on the flat line.
"""
