#ifndef ZFPD_ZFPD_HPP
#define ZFPD_ZFPD_HPP

#include "zfpd/canonical.hpp"
#include "zfpd/enumerate.hpp"
#include "zfpd/families.hpp"
#include "zfpd/graph.hpp"
#include "zfpd/graph6.hpp"
#include "zfpd/invariants.hpp"
#include "zfpd/minor.hpp"
#include "zfpd/parallel.hpp"
#include "zfpd/products.hpp"
#include "zfpd/propagation.hpp"
#include "zfpd/report.hpp"
#include "zfpd/theorems.hpp"
#include "zfpd/vertex_set.hpp"

#endif  // ZFPD_ZFPD_HPP
