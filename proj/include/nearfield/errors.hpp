// SPDX-License-Identifier: Apache-2.0
//
// nearfield-mimo: near-field LOS MIMO channel, EDoF and capacity toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace nearfield
{

// Element index outside [1, count].
class IndexError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Coincident or zero-distance element pair.
class DegenerateGeometryError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Scenario or array parameters outside their valid range (x_R <= 0, non-finite SNR, ...).
class InvalidScenarioError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// EDoF or rank requested for an all-zero correlation matrix.
class UndefinedMetricError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Operand dimensions disagree.
class ShapeError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A sweep point failed; the message names the point.
class SweepError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace nearfield
