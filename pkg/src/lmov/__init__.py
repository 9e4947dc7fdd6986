"""Colored quantum invariants of links and the LMOV integrality pipeline."""
