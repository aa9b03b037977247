#pragma once

#include "haggelab/numeric.hpp"
#include "haggelab/geom.hpp"
#include "haggelab/centers.hpp"
#include "haggelab/hagge.hpp"
#include "haggelab/speckman.hpp"
#include "haggelab/section8.hpp"
#include "haggelab/random.hpp"
#include "haggelab/suites.hpp"
#include "haggelab/script.hpp"
#include "haggelab/svg.hpp"
