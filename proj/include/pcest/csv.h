// Copyright 2026 The pcest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCEST_CSV_H
#define PCEST_CSV_H

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pcest {

/// Shortest decimal string that parses back to the same double.
/// Non-finite values become "inf", "-inf" or "nan".
std::string format_double(double x);

/// Comma-separated rows with LF line endings.
class CsvWriter {
   public:
    CsvWriter(std::ostream &out, std::initializer_list<std::string_view> header);

    void row(const std::vector<std::string> &cells);

   private:
    std::ostream &out_;
    std::size_t columns_;
};

}  // namespace pcest

#endif
