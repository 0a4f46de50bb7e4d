"""Decreasing monomial codes and their weight distributions."""
