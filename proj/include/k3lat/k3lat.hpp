#pragma once

#include "k3lat/e8.hpp"
#include "k3lat/enumerate.hpp"
#include "k3lat/error.hpp"
#include "k3lat/glue.hpp"
#include "k3lat/gram_io.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/linalg.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/normal_form.hpp"
#include "k3lat/number.hpp"
#include "k3lat/reference_table.hpp"
#include "k3lat/sbad.hpp"
#include "k3lat/spec_parser.hpp"
#include "k3lat/table_format.hpp"
