"""qstrat: exact computations with quiver algebras and their stratified,
tilting, Ringel-dual and cellular structure."""

from .exactla import QQ, PrimeField, Matrix, field_from_name

__all__ = ["QQ", "PrimeField", "Matrix", "field_from_name"]
