#include "resforge/export_fmt.hpp"
// placeholder translation unit
