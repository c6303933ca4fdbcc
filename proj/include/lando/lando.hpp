#ifndef LANDO_LANDO_HPP
#define LANDO_LANDO_HPP

#include "lando/canonical.hpp"
#include "lando/certificate_io.hpp"
#include "lando/circles.hpp"
#include "lando/edge_set.hpp"
#include "lando/enumeration.hpp"
#include "lando/linking.hpp"
#include "lando/prufer.hpp"
#include "lando/realizability.hpp"
#include "lando/survey.hpp"
#include "lando/tree.hpp"
#include "lando/tree_io.hpp"

#endif  // LANDO_LANDO_HPP
