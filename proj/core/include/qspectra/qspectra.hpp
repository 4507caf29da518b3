#pragma once

#include "qspectra/affine.hpp"
#include "qspectra/bichar.hpp"
#include "qspectra/int_matrix.hpp"
#include "qspectra/io.hpp"
#include "qspectra/lattice.hpp"
#include "qspectra/toric.hpp"
#include "qspectra/value_group.hpp"
