# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Weyl algebras and the differential graded algebras built from them."""
