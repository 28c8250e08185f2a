#pragma once

#include "radii/connection.hpp"
#include "radii/errors.hpp"
#include "radii/json_io.hpp"
#include "radii/logvalue.hpp"
#include "radii/morphism.hpp"
#include "radii/pushforward.hpp"
#include "radii/pwm.hpp"
#include "radii/rational.hpp"
