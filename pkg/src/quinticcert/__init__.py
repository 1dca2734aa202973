"""Certification of the quintic family f_{w,s} and its quadratic fields."""
