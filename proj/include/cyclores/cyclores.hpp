#pragma once

#include "cyclores/cycint.hpp"
#include "cyclores/cycunits.hpp"
#include "cyclores/errors.hpp"
#include "cyclores/fltharness.hpp"
#include "cyclores/json_io.hpp"
#include "cyclores/powsym.hpp"
#include "cyclores/regulab.hpp"
#include "cyclores/resfield.hpp"
