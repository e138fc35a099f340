#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace vest {

inline std::atomic<int> &worker_threads_setting()
{
	static std::atomic<int> n{0};
	return n;
}

// 0 selects the hardware concurrency
inline void set_worker_threads(int n) { worker_threads_setting().store(std::max(0, n)); }

inline int worker_threads()
{
	int n = worker_threads_setting().load();
	if (n > 0)
		return n;
	return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(i) for i in [0, n); f must only touch state owned by index i.
template <class F> void parallel_for(int n, F &&f)
{
	int workers = std::min(worker_threads(), n);
	if (workers <= 1) {
		for (int i = 0; i < n; ++i)
			f(i);
		return;
	}
	std::atomic<int> next{0};
	std::exception_ptr error;
	std::atomic<bool> failed{false};
	std::vector<std::thread> pool;
	for (int w = 0; w < workers; ++w)
		pool.emplace_back([&] {
			for (int i = next++; i < n && !failed; i = next++) {
				try {
					f(i);
				} catch (...) {
					if (!failed.exchange(true))
						error = std::current_exception();
				}
			}
		});
	for (auto &t : pool)
		t.join();
	if (error)
		std::rethrow_exception(error);
}

} // namespace vest
