#include <pybind11/pybind11.h>
PYBIND11_MODULE(_videomt, m) { m.doc() = "videomt"; }
