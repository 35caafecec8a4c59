# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Hochschild chains, twisting cochains and the extraction of homology classes."""
