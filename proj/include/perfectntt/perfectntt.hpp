#pragma once

#include "codes.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "properties.hpp"
#include "reference.hpp"
#include "transforms.hpp"
