#ifndef BARYMIN_BARYMIN_HPP
#define BARYMIN_BARYMIN_HPP

#include "barymin/aaa.hpp"
#include "barymin/approx.hpp"
#include "barymin/barycentric.hpp"
#include "barymin/catalog.hpp"
#include "barymin/domains.hpp"
#include "barymin/functions.hpp"
#include "barymin/io.hpp"
#include "barymin/lawson.hpp"
#include "barymin/numerics.hpp"
#include "barymin/sample_set.hpp"
#include "barymin/serialize.hpp"
#include "barymin/svg.hpp"
#include "barymin/types.hpp"

#endif
