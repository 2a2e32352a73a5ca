"""Arithmetic of primitive divisors and prime graphs of finite simple classical groups."""
