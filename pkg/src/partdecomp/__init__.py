"""Blocks and decomposition matrices of partition algebras."""
