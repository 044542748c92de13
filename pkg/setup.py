"""Build hook for the optional compiled summation kernel.

The extension links against the MPFR/GMP shared objects bundled with the
installed gmpy2 wheel so that exactly one MPFR instance is loaded at runtime.
That keeps the compiled kernel bit-identical to the pure-Python one (both are
sequences of correctly rounded MPFR operations at the same precision).

The extension is marked optional: if Cython, gmpy2 headers, or a C compiler
are missing, the build logs a warning and the package falls back to the
pure-Python kernel at import time.
"""

import glob
import os

from setuptools import Extension, setup


def _accel_extension():
    try:
        import gmpy2
        from Cython.Build import cythonize
    except ImportError:
        return []

    pkg_dir = os.path.dirname(os.path.abspath(gmpy2.__file__))
    site_dir = os.path.dirname(pkg_dir)

    # manylinux wheels ship their own libmpfr/libgmp under gmpy2.libs
    libs_dir = os.path.join(site_dir, "gmpy2.libs")
    link_args = sorted(glob.glob(os.path.join(libs_dir, "libmpfr*.so*")))
    link_args += sorted(glob.glob(os.path.join(libs_dir, "libgmp*.so*")))
    libraries = []
    if link_args:
        link_args.append("-Wl,-rpath," + libs_dir)
    else:
        libraries = ["mpfr", "gmp"]

    ext = Extension(
        "tstar._accel",
        ["src/tstar/_accel.pyx"],
        include_dirs=[pkg_dir],
        libraries=libraries,
        extra_link_args=link_args,
        optional=True,
    )
    # gmpy2.pxd lives inside the gmpy2 package directory
    return cythonize([ext], include_path=[site_dir], language_level=3)


setup(ext_modules=_accel_extension())
