#pragma once

#include "tbfloer/census.hpp"
#include "tbfloer/floer.hpp"
#include "tbfloer/graded_complex.hpp"
#include "tbfloer/json_io.hpp"
#include "tbfloer/laurent.hpp"
#include "tbfloer/matrix.hpp"
#include "tbfloer/model_complex.hpp"
#include "tbfloer/smith.hpp"
#include "tbfloer/svg.hpp"
#include "tbfloer/twobridge.hpp"
#include "tbfloer/umodule.hpp"
