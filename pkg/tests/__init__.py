"""Test package for robustprice."""
