// SPDX-License-Identifier: Apache-2.0

#ifndef GSB_SRC_PARALLEL_HPP
#define GSB_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gsb::detail {

/// Calls fn(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn)
{
	jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 256))));
	if (jobs <= 1) {
		for (std::size_t i = 0; i < count; i++)
			fn(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mutex;
	{
		std::vector<std::jthread> pool;
		pool.reserve(jobs);
		for (unsigned t = 0; t < jobs; t++)
			pool.emplace_back([&] {
				for (std::size_t i; (i = next.fetch_add(1)) < count;) {
					try {
						fn(i);
					} catch (...) {
						std::lock_guard lock(error_mutex);
						if (!error)
							error = std::current_exception();
						next = count;
					}
				}
			});
	}
	if (error)
		std::rethrow_exception(error);
}

} // namespace gsb::detail

#endif
