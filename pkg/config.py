# config.py - 系统配置文件（DAHA / 环面超代数验证器）

import os

try:
    from dotenv import load_dotenv
    load_dotenv()  # 读取项目根目录下的 .env（如存在）
except ImportError:  # pragma: no cover
    pass

# 默认运行参数（可被配置文件与命令行参数覆盖）
DEFAULT_M = 3  # gl(m|n) 中的 m
DEFAULT_N = 1  # gl(m|n) 中的 n
DEFAULT_ELL = 1  # 张量次数 ℓ
DEFAULT_MODES = 2  # 模式截断界 R，验证 |r| ≤ R
DEFAULT_PARITY = "standard"  # 奇偶序列：standard 或 "++-+" 形式
DEFAULT_MODE = "both"  # symbolic / numeric / both
DEFAULT_Q0 = 2  # 数值特化点 q
DEFAULT_D0 = 3  # 数值特化点 d
DEFAULT_SEED = 0  # 随机向量组种子
DEFAULT_JOBS = 1  # 并行工作线程数

# 验证规模限制
MAX_DAHA_ELL = 4  # check_daha_presentation 支持的最大 ℓ
MIN_TOROIDAL_KAPPA = 4  # 环面超代数要求 κ = m + n ≥ 4
SERRE_MODE_BOUND = 1  # Serre 关系的模式界取 min(R, 该值)
RESIDUAL_PREVIEW_KEYS = 5  # 报告中残差预览的最多项数
RANDOM_BATTERY_SIZE = 6  # random 向量组中额外随机元素个数
NUMERIC_RANDOM_POINTS = 5  # 数值预筛在 (q0, d0) 之外的随机有理点个数
BATTERY_CHOICES = ("default", "generators", "random")

# 文件路径
REPORTS_DIR = "./reports"
LOGS_DIR = "./logs"

# 日志配置
LOG_LEVEL = "INFO"  # DEBUG, INFO, WARNING, ERROR
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# 环境变量覆盖
LOG_LEVEL = os.getenv("SWD_LOG_LEVEL", LOG_LEVEL)
REPORTS_DIR = os.getenv("SWD_REPORTS_DIR", REPORTS_DIR)
LOGS_DIR = os.getenv("SWD_LOGS_DIR", LOGS_DIR)

# 退出码
EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2

# 输出格式
OUTPUT_FORMATS = {
    "thinking": "💭 [思考]",
    "action": "🔧 [执行]",
    "file": "📁 [文件]",
    "success": "✅ [成功]",
    "error": "❌ [错误]",
    "warning": "⚠️ [警告]",
    "info": "ℹ️ [信息]",
    "suite": "🧮 [验证]",
    "bench": "⏱️ [计时]",
}
