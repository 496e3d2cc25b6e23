import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="NicholsPy",
    version="0.1.0",
    author="NicholsPy developers",
    description="Freeness of Nichols algebras of diagonal type with Python",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["NicholsPy",
              "NicholsPy.analyzer",
              "NicholsPy.cli",
              "NicholsPy.field",
              "NicholsPy.poly",
              "NicholsPy.shuffle",
              "NicholsPy.words"],
    package_dir={'NicholsPy': 'NicholsPy'},
    install_requires=['numpy', 'scipy', 'sympy>=1.12'],
    extras_require={'mpi': ['mpi4py'], 'test': ['pytest']},
    entry_points={'console_scripts': [
        'nicholspy = NicholsPy.cli.main:main']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
)
