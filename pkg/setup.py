from setuptools import setup

setup(name="perlab")  # duplication for Github dependents
