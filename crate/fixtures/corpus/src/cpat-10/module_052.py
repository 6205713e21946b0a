
def step_206(cfg):
    v0_s206 = []
    for v1_s206 in range(len(v2_s206)):
        if v3_s206(v2_s206[v1_s206]):
            v0_s206 += [v2_s206[v1_s206]]
    return cfg

def step_437(cfg):
    v0_s437 = []
    for v1_s437 in range(len(v2_s437)):
        if v3_s437(v2_s437[v1_s437]):
            v0_s437 += [v2_s437[v1_s437]]
    return cfg

def step_668(cfg):
    v0_s668 = []
    for v1_s668 in range(len(v2_s668)):
        if v3_s668(v2_s668[v1_s668]):
            v0_s668 += [v2_s668[v1_s668]]
    return cfg

def step_899(cfg):
    v0_s899 = []
    for v1_s899 in range(len(v2_s899)):
        if v3_s899(v2_s899[v1_s899]):
            v0_s899 += [v2_s899[v1_s899]]
    return cfg

def step_219(cfg):
    v0_s219 = []
    for v1_s219 in range(len(v2_s219)):
        if v3_s219(v2_s219[v1_s219]):
            v0_s219 = v0_s219 + [v2_s219[v1_s219]]
    return cfg

def step_450(cfg):
    v0_s450 = []
    for v1_s450 in range(len(v2_s450)):
        if v3_s450(v2_s450[v1_s450]):
            v0_s450 = v0_s450 + [v2_s450[v1_s450]]
    return cfg

def step_681(cfg):
    v0_s681 = []
    for v1_s681 in range(len(v2_s681)):
        if v3_s681(v2_s681[v1_s681]):
            v0_s681 = v0_s681 + [v2_s681[v1_s681]]
    return cfg

def step_1(cfg):
    v0_s1 = []
    for v1_s1 in range(len(v2_s1)):
        if v3_s1(v2_s1[v1_s1]):
            v0_s1.append(v2_s1[v1_s1])
    return cfg

def step_232(cfg):
    v0_s232 = []
    for v1_s232 in range(len(v2_s232)):
        v3_s232 = v2_s232[v1_s232]
        if v4_s232(v3_s232):
            v0_s232.append(v3_s232)
    return cfg

def step_463(cfg):
    v0_s463 = []
    for v1_s463 in range(len(v2_s463)):
        v3_s463 = v2_s463[v1_s463]
        if v4_s463(v3_s463):
            v0_s463.append(v3_s463)
    return cfg

def step_694(cfg):
    v0_s694 = []
    for v1_s694 in range(len(v2_s694)):
        v3_s694 = v2_s694[v1_s694]
        if v4_s694(v3_s694):
            v0_s694.append(v3_s694)
    return cfg

def step_14(cfg):
    v0_s14 = []
    for v1_s14 in range(len(v2_s14)):
        if v3_s14(v2_s14[v1_s14]):
            v0_s14.append(v2_s14[v1_s14])
    return cfg
