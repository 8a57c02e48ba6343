"""Torsion classes, ICE-closed subcategories and wide tau-tilting modules."""
