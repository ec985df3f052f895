"""
Polycategory Workbench
Finite planar polycategories, their universal objects, fibrations, polytope
norms and lax normal functors
"""
__version__ = '0.3.0'
