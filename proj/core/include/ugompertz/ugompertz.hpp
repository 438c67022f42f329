#ifndef UGOMPERTZ_UGOMPERTZ_HPP_
#define UGOMPERTZ_UGOMPERTZ_HPP_

#include "ugompertz/data_sample.hpp"
#include "ugompertz/entropy.hpp"
#include "ugompertz/errors.hpp"
#include "ugompertz/io.hpp"
#include "ugompertz/lmoments.hpp"
#include "ugompertz/oracle.hpp"
#include "ugompertz/quadrature.hpp"
#include "ugompertz/special.hpp"
#include "ugompertz/truncated.hpp"
#include "ugompertz/unit_gompertz.hpp"
#include "ugompertz/verify.hpp"

#endif  // UGOMPERTZ_UGOMPERTZ_HPP_
