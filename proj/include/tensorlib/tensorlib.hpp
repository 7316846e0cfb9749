#pragma once

#include <tensorlib/algorithm.hpp>
#include <tensorlib/contraction.hpp>
#include <tensorlib/errors.hpp>
#include <tensorlib/hopm.hpp>
#include <tensorlib/iterators.hpp>
#include <tensorlib/layout.hpp>
#include <tensorlib/matlab.hpp>
#include <tensorlib/tensor.hpp>
#include <tensorlib/tensor_view.hpp>
