#include <pybind11/pybind11.h>
PYBIND11_MODULE(_qybe, m) { m.doc() = "placeholder"; }
