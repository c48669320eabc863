#pragma once

#include "homat/category.hpp"
#include "homat/cobordism.hpp"
#include "homat/complex.hpp"
#include "homat/errors.hpp"
#include "homat/graded.hpp"
#include "homat/intervals.hpp"
#include "homat/matrix.hpp"
#include "homat/rational.hpp"
#include "homat/report.hpp"
#include "homat/sympower.hpp"
