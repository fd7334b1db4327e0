"""
Finite and symbolically presented algebraic structures, Smarandache
property detectors, and the checks that back them.
"""
