"""Exact sexagesimal arithmetic and Fara-period Sumerian metrology."""
