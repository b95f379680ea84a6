from setuptools import setup, find_packages

with open('README.rst') as f:
    long_description = f.read()

setup(
    name='steinercodes',
    license='MIT',
    description='Affine-invariant binary codes, their weight distributions and Steiner systems S(2, 4, 2^m)',
    long_description=long_description,
    use_scm_version=True,
    setup_requires=['setuptools_scm'],
    packages=find_packages(exclude=['test', 'test.*']),
    install_requires=[
        'argcomplete',
        'logwood',
        'numpy>=1.17',
    ],
    python_requires='>=3.8',
    include_package_data=True,
    extras_require={
        'test': ['pytest', 'galois>=0.3'],
    },
    entry_points={
        'console_scripts': [
            'steinercodes = steinercodes.cli:main',
        ],
    },
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
