"""Bound formulas, h-vectors, surfaces, linkage and audits"""
