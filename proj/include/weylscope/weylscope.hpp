#pragma once

#include "apartment.hpp"
#include "errors.hpp"
#include "gl_models.hpp"
#include "parabolic.hpp"
#include "polyfan.hpp"
#include "rational.hpp"
#include "root_datum.hpp"
#include "type_geometry.hpp"
