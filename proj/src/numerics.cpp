// SPDX-License-Identifier: Apache-2.0
//
// sclink - link-level simulator for MIMO millimeter-wave single-carrier links
// Copyright (C) 2026 The sclink authors
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

#include "sclink/numerics.hpp"

#include "sclink/errors.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace sclink::numerics
{

namespace
{

// FFTW planning is not thread-safe, execution with the new-array interface is.
// Plans are created once per (length, batch, direction) and kept for the process lifetime.
class PlanCache
{
public:
    fftw_plan get(int n, int batch, int sign)
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(n, batch, sign);
        if (auto it = plans_.find(key); it != plans_.end())
            return it->second;

        // Column-major (batch x n) layout: sequence b starts at offset b with stride batch
        std::vector<fftw_complex> in(static_cast<std::size_t>(n) * batch), out(in.size());
        fftw_plan p = fftw_plan_many_dft(1, &n, batch, in.data(), nullptr, batch, 1, out.data(), nullptr, batch, 1,
                                         sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache &plan_cache()
{
    static PlanCache cache;
    return cache;
}

void run(const cdouble *in, cdouble *out, int n, int batch, int sign)
{
    fftw_plan p = plan_cache().get(n, batch, sign);
    // fftw_execute_dft does not modify the input for out-of-place plans
    fftw_execute_dft(p, reinterpret_cast<fftw_complex *>(const_cast<cdouble *>(in)),
                     reinterpret_cast<fftw_complex *>(out));
}

} // namespace

ComplexVector fft(const ComplexVector &x, std::size_t k)
{
    if (k == 0 || static_cast<std::size_t>(x.size()) != k)
        throw ContractViolation("fft: length " + std::to_string(x.size()) + " does not match k=" + std::to_string(k));
    ComplexVector out(x.size());
    run(x.data(), out.data(), static_cast<int>(k), 1, FFTW_FORWARD);
    return out;
}

ComplexVector ifft(const ComplexVector &x, std::size_t k)
{
    if (k == 0 || static_cast<std::size_t>(x.size()) != k)
        throw ContractViolation("ifft: length " + std::to_string(x.size()) + " does not match k=" + std::to_string(k));
    ComplexVector out(x.size());
    run(x.data(), out.data(), static_cast<int>(k), 1, FFTW_BACKWARD);
    out /= static_cast<double>(k);
    return out;
}

ComplexMatrix fft_rows(const ComplexMatrix &x)
{
    if (x.size() == 0)
        throw ContractViolation("fft_rows: empty input");
    ComplexMatrix out(x.rows(), x.cols());
    run(x.data(), out.data(), static_cast<int>(x.cols()), static_cast<int>(x.rows()), FFTW_FORWARD);
    return out;
}

ComplexMatrix ifft_rows(const ComplexMatrix &x)
{
    if (x.size() == 0)
        throw ContractViolation("ifft_rows: empty input");
    ComplexMatrix out(x.rows(), x.cols());
    run(x.data(), out.data(), static_cast<int>(x.cols()), static_cast<int>(x.rows()), FFTW_BACKWARD);
    out /= static_cast<double>(x.cols());
    return out;
}

Svd svd(const ComplexMatrix &m)
{
    Eigen::JacobiSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

ComplexMatrix hermitian_solve(const ComplexMatrix &a, const ComplexMatrix &b)
{
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw ContractViolation("hermitian_solve: dimension mismatch");

    Eigen::LLT<ComplexMatrix> llt(a);
    if (llt.info() != Eigen::Success)
        throw SingularSystemError("hermitian_solve: matrix is not positive definite");
    const double rc = llt.rcond();
    if (!(rc * kMaxConditionNumber >= 1.0))
        throw SingularSystemError("hermitian_solve: condition number exceeds 1e12 (rcond=" + std::to_string(rc) + ")");
    return llt.solve(b);
}

double reciprocal_condition(const ComplexMatrix &a)
{
    if (a.rows() != a.cols())
        throw ContractViolation("reciprocal_condition: matrix is not square");
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    if (norm == 0.0)
        return 0.0;
    Eigen::FullPivLU<ComplexMatrix> lu(a);
    if (!lu.isInvertible())
        return 0.0;
    const double inv_norm = lu.inverse().cwiseAbs().colwise().sum().maxCoeff();
    return 1.0 / (norm * inv_norm);
}

ComplexMatrix checked_inverse(const ComplexMatrix &a)
{
    if (a.rows() != a.cols())
        throw ContractViolation("checked_inverse: matrix is not square");
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    ComplexMatrix inv = lu.inverse();
    const double inv_norm = inv.cwiseAbs().colwise().sum().maxCoeff();
    const double cond = norm * inv_norm;
    if (!std::isfinite(cond) || cond > kMaxConditionNumber || norm == 0.0)
        throw SingularSystemError("checked_inverse: condition number exceeds 1e12");
    return inv;
}

} // namespace sclink::numerics
