#ifndef ENRIQUES_ENRIQUES_HPP
#define ENRIQUES_ENRIQUES_HPP

#include "enriques/cells.hpp"
#include "enriques/charclass.hpp"
#include "enriques/chow.hpp"
#include "enriques/dsl.hpp"
#include "enriques/groebner.hpp"
#include "enriques/mpoly.hpp"
#include "enriques/paperlab.hpp"

#endif
