#pragma once

#include "shapelab/abgroup.hpp"
#include "shapelab/base.hpp"
#include "shapelab/exactla.hpp"
#include "shapelab/io.hpp"
#include "shapelab/posets.hpp"
#include "shapelab/random_instances.hpp"
#include "shapelab/shapefunctors.hpp"
#include "shapelab/simplicial.hpp"
#include "shapelab/systems.hpp"
