#pragma once

#include "pgemb/category.hpp"
#include "pgemb/degree.hpp"
#include "pgemb/hom.hpp"
#include "pgemb/io.hpp"
#include "pgemb/model.hpp"
#include "pgemb/monoid.hpp"
#include "pgemb/polygon.hpp"
#include "pgemb/reflect.hpp"
#include "pgemb/search.hpp"
#include "pgemb/tau.hpp"
#include "pgemb/validate.hpp"
#include "pgemb/words.hpp"
