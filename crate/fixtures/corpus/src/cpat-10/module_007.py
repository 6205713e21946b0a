
def step_273(cfg):
    v0_s273 = []
    for v1_s273 in range(len(v2_s273)):
        if v3_s273(v2_s273[v1_s273]):
            v0_s273 = v0_s273 + [v2_s273[v1_s273]]
    return cfg

def step_504(cfg):
    v0_s504 = []
    for v1_s504 in range(len(v2_s504)):
        if v3_s504(v2_s504[v1_s504]):
            v0_s504 = v0_s504 + [v2_s504[v1_s504]]
    return cfg

def step_735(cfg):
    v0_s735 = []
    for v1_s735 in range(len(v2_s735)):
        if v3_s735(v2_s735[v1_s735]):
            v0_s735 = v0_s735 + [v2_s735[v1_s735]]
    return cfg

def step_55(cfg):
    v0_s55 = []
    for v1_s55 in range(len(v2_s55)):
        v3_s55 = v2_s55[v1_s55]
        if v4_s55(v3_s55):
            v0_s55.append(v3_s55)
    return cfg

def step_286(cfg):
    v0_s286 = []
    for v1_s286 in range(len(v2_s286)):
        v3_s286 = v2_s286[v1_s286]
        if v4_s286(v3_s286):
            v0_s286.append(v3_s286)
    return cfg

def step_517(cfg):
    v0_s517 = []
    for v1_s517 in range(len(v2_s517)):
        v3_s517 = v2_s517[v1_s517]
        if v4_s517(v3_s517):
            v0_s517.append(v3_s517)
    return cfg

def step_748(cfg):
    v0_s748 = []
    for v1_s748 in range(len(v2_s748)):
        v3_s748 = v2_s748[v1_s748]
        if v4_s748(v3_s748):
            v0_s748.append(v3_s748)
    return cfg

def step_68(cfg):
    v0_s68 = []
    for v1_s68 in range(len(v2_s68)):
        if v3_s68(v2_s68[v1_s68]):
            v0_s68 += [v2_s68[v1_s68]]
    return cfg

def step_299(cfg):
    v0_s299 = []
    for v1_s299 in range(len(v2_s299)):
        if v3_s299(v2_s299[v1_s299]):
            v0_s299 += [v2_s299[v1_s299]]
    return cfg

def step_530(cfg):
    v0_s530 = []
    for v1_s530 in range(len(v2_s530)):
        if v3_s530(v2_s530[v1_s530]):
            v0_s530 += [v2_s530[v1_s530]]
    return cfg

def step_761(cfg):
    v0_s761 = []
    for v1_s761 in range(len(v2_s761)):
        if v3_s761(v2_s761[v1_s761]):
            v0_s761 += [v2_s761[v1_s761]]
    return cfg

def step_81(cfg):
    v0_s81 = []
    for v1_s81 in range(len(v2_s81)):
        if v3_s81(v2_s81[v1_s81]):
            v0_s81 = v0_s81 + [v2_s81[v1_s81]]
    return cfg
