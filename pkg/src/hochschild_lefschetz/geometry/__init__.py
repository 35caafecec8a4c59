# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Triangulations, simplex quadrature and line bundles on the projective line."""
