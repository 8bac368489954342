# utils 包：配置、情景文件、报告输出与内置示例
