#pragma once

#include "bgb/bounds.hpp"
#include "bgb/coords.hpp"
#include "bgb/driver.hpp"
#include "bgb/errors.hpp"
#include "bgb/extension_field.hpp"
#include "bgb/groebner.hpp"
#include "bgb/io.hpp"
#include "bgb/lexgb.hpp"
#include "bgb/lifting.hpp"
#include "bgb/matrix.hpp"
#include "bgb/normal_forms.hpp"
#include "bgb/oracle.hpp"
#include "bgb/poly.hpp"
#include "bgb/primes.hpp"
#include "bgb/rings.hpp"
#include "bgb/sylvester.hpp"
